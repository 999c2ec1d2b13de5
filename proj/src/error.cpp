#include "biasgauge/error.hpp"

namespace biasgauge {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FileNotReadable: return "FileNotReadable";
        case ErrorCode::ColumnNotFound: return "ColumnNotFound";
        case ErrorCode::TargetNotBinary: return "TargetNotBinary";
        case ErrorCode::EmptyAfterFiltering: return "EmptyAfterFiltering";
        case ErrorCode::DegenerateTarget: return "DegenerateTarget";
        case ErrorCode::DegenerateMarginal: return "DegenerateMarginal";
        case ErrorCode::NegativeProbability: return "NegativeProbability";
        case ErrorCode::RowNotNormalized: return "RowNotNormalized";
        case ErrorCode::UnknownFixture: return "UnknownFixture";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace biasgauge

#include "biasgauge/render.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "biasgauge/error.hpp"

// Static SVG badges. Layout is fixed and computed with integer arithmetic so
// identical documents always produce identical bytes. The only numeric
// strings placed in text nodes are values that the serialized document also
// contains (the 3-decimal renderings, counts, and level names); everything
// else numeric lives in attributes, which are not part of the text layer.

namespace biasgauge {

namespace {

constexpr int kRowHeight = 26;

const char* kInk = "#212529";
const char* kMuted = "#868e96";
const char* kPanel = "#f8f9fa";
const char* kBar = "#4c6ef5";

// Fill shades for probability cells, light to dark.
const char* kShades[5] = {"#edf2ff", "#bac8ff", "#91a7ff", "#5c7cfa", "#3b5bdb"};

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

const char* magnitude_color(EffectMagnitude magnitude) {
    switch (magnitude) {
        case EffectMagnitude::VerySmall: return "#2f9e44";
        case EffectMagnitude::Small: return "#f08c00";
        case EffectMagnitude::Medium: return "#e8590c";
        case EffectMagnitude::Large: return "#c92a2a";
    }
    return "#2f9e44";
}

// Small builder so every badge shares one header/footer and text idiom.
class Svg {
public:
    Svg(int width, int height) : width_(width), height_(height) {
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
             << height << "\" viewBox=\"0 0 " << width << " " << height << "\" role=\"img\">\n";
        out_ << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
                "patternTransform=\"rotate(45)\"><rect width=\"6\" height=\"6\" fill=\"#f1f3f5\"/>"
                "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#adb5bd\" stroke-width=\"2\"/>"
                "</pattern></defs>\n";
        rect(0, 0, width, height, "#ffffff");
    }

    void rect(int x, int y, int w, int h, const std::string& fill) {
        out_ << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
             << "\" fill=\"" << fill << "\"/>\n";
    }

    void text(int x, int y, const std::string& content, const char* fill = nullptr,
              int size = 12, bool bold = false, const char* anchor = nullptr) {
        out_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"Helvetica,Arial,sans-serif\""
             << " font-size=\"" << size << "\" fill=\"" << (fill ? fill : kInk) << "\"";
        if (bold) out_ << " font-weight=\"bold\"";
        if (anchor) out_ << " text-anchor=\"" << anchor << "\"";
        out_ << ">" << escape_xml(content) << "</text>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

    int width() const { return width_; }
    int height() const { return height_; }

private:
    int width_;
    int height_;
    std::ostringstream out_;
};

void title_block(Svg& svg, const std::string& section, const std::string& name) {
    svg.rect(0, 0, svg.width(), 30, kPanel);
    svg.text(10, 20, section, kInk, 14, true);
    svg.text(svg.width() - 10, 20, name, kMuted, 12, false, "end");
}

int shade_bucket(double probability) {
    const int bucket = int(probability * 5.0);
    return bucket < 0 ? 0 : (bucket > 4 ? 4 : bucket);
}

// One level x target matrix of probability cells with a left label column.
void grid(Svg& svg, int top, const std::string& caption,
          const std::vector<std::string>& levels, const std::array<std::string, 2>& targets,
          const std::vector<ProbValue>& cells) {
    const int label_width = 150;
    const int cell_width = 110;
    svg.text(10, top + 14, caption, kMuted, 12);
    const int header_y = top + 30;
    for (std::size_t t = 0; t < 2; ++t) {
        svg.text(label_width + int(t) * cell_width + cell_width / 2, header_y,
                 "target " + targets[t], kMuted, 11, false, "middle");
    }
    for (std::size_t a = 0; a < levels.size(); ++a) {
        const int y = header_y + 8 + int(a) * kRowHeight;
        svg.text(10, y + 17, levels[a], kInk, 12);
        for (std::size_t t = 0; t < 2; ++t) {
            const int x = label_width + int(t) * cell_width;
            const ProbValue& cell = cells[a * 2 + t];
            if (cell.defined) {
                const int bucket = shade_bucket(cell.value);
                svg.rect(x, y, cell_width - 4, kRowHeight - 4, kShades[bucket]);
                svg.text(x + (cell_width - 4) / 2, y + 16, render_fixed(cell.value, 3),
                         bucket >= 3 ? "#ffffff" : kInk, 12, false, "middle");
            } else {
                svg.rect(x, y, cell_width - 4, kRowHeight - 4, "url(#hatch)");
                svg.text(x + (cell_width - 4) / 2, y + 16, "undefined", kMuted, 11, false,
                         "middle");
            }
        }
    }
}

int grid_height(std::size_t levels) { return 38 + int(levels) * kRowHeight + 10; }

Badge dependence_badge(const AnnotationDocument& document, const std::string& stem) {
    Svg svg(380, 170);
    title_block(svg, "dependence", document.meta.name);
    if (document.dependence.computable) {
        const DependenceSummary& s = document.dependence.summary;
        svg.text(10, 62, to_string(s.magnitude), magnitude_color(s.magnitude), 24, true);
        svg.text(10, 88, "w " + render_fixed(s.effect_size_w, 3), kInk, 13);
        svg.text(120, 88, "C " + render_fixed(s.contingency_coefficient, 3), kInk, 13);
        svg.text(230, 88, "chi-square " + render_fixed(s.chi_square, 3), kInk, 13);

        // Gauge over w in [0, 0.6]: the four magnitude bins, then a marker.
        const int gauge_x = 10, gauge_y = 110, gauge_w = 360;
        const auto scale = [&](double w) {
            const double clamped = w < 0.0 ? 0.0 : (w > 0.6 ? 0.6 : w);
            return gauge_x + int(std::lround(clamped / 0.6 * gauge_w));
        };
        const double bounds[5] = {0.0, 0.1, 0.3, 0.5, 0.6};
        const EffectMagnitude bins[4] = {EffectMagnitude::VerySmall, EffectMagnitude::Small,
                                         EffectMagnitude::Medium, EffectMagnitude::Large};
        for (int i = 0; i < 4; ++i)
            svg.rect(scale(bounds[i]), gauge_y, scale(bounds[i + 1]) - scale(bounds[i]), 16,
                     magnitude_color(bins[i]));
        svg.rect(scale(s.effect_size_w) - 2, gauge_y - 5, 4, 26, kInk);
        svg.text(10, 155, "effect size gauge", kMuted, 11);
    } else {
        svg.text(10, 62, "not computable", kMuted, 20, true);
        svg.text(10, 88, document.dependence.reason, kMuted, 11);
    }
    return {stem + "_dependence.svg", svg.finish()};
}

Badge diverseness_badge(const AnnotationDocument& document, const std::string& stem) {
    const ProbabilityTables& tables = document.tables;
    const std::size_t r = tables.protected_levels.size();
    const int top = 40;
    Svg svg(420, top + (2 + int(r)) * kRowHeight + 40);
    title_block(svg, "diverseness", document.meta.name);

    const int label_width = 150, bar_max = 180, value_x = 400;
    int y = top;
    const auto bar_row = [&](const std::string& label, double probability) {
        svg.text(10, y + 17, label, kInk, 12);
        svg.rect(label_width, y + 5, int(std::lround(probability * bar_max)), kRowHeight - 12, kBar);
        svg.text(value_x, y + 17, render_fixed(probability, 3), kInk, 12, false, "end");
        y += kRowHeight;
    };
    svg.text(10, y + 8, "target priors", kMuted, 11);
    y += 14;
    for (std::size_t t = 0; t < 2; ++t)
        bar_row("target " + tables.target_levels[t], tables.prior_target[t]);
    svg.text(10, y + 12, "protected priors", kMuted, 11);
    y += 18;
    for (std::size_t a = 0; a < r; ++a)
        bar_row(tables.protected_levels[a], tables.prior_protected[a]);
    return {stem + "_diverseness.svg", svg.finish()};
}

Badge inclusiveness_badge(const AnnotationDocument& document, const std::string& stem) {
    const ProbabilityTables& tables = document.tables;
    const std::size_t r = tables.protected_levels.size();
    Svg svg(380, 40 + grid_height(r));
    title_block(svg, "inclusiveness", document.meta.name);
    std::vector<ProbValue> cells(r * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = {tables.joint[i], true};
    grid(svg, 40, "joint probability", tables.protected_levels, tables.target_levels, cells);
    return {stem + "_inclusiveness.svg", svg.finish()};
}

Badge likelihood_badge(const AnnotationDocument& document, const std::string& stem) {
    const ProbabilityTables& tables = document.tables;
    const std::size_t r = tables.protected_levels.size();
    const int first_top = 40;
    const int second_top = first_top + grid_height(r) + 8;
    Svg svg(380, second_top + grid_height(r));
    title_block(svg, "training likelihood", document.meta.name);
    grid(svg, first_top, "P(target | protected)", tables.protected_levels, tables.target_levels,
         tables.cond_target_given_protected);
    grid(svg, second_top, "P(protected | target)", tables.protected_levels, tables.target_levels,
         tables.cond_protected_given_target);
    return {stem + "_likelihood.svg", svg.finish()};
}

}  // namespace

std::string sanitize_name(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (const char c : name) {
        const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                          (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        out.push_back(safe ? c : '-');
    }
    return out.empty() ? std::string("report") : out;
}

BadgeSet render_badges(const AnnotationDocument& document) {
    const std::string stem = sanitize_name(document.meta.name);
    return {dependence_badge(document, stem), diverseness_badge(document, stem),
            inclusiveness_badge(document, stem), likelihood_badge(document, stem)};
}

std::vector<std::string> write_badges(const BadgeSet& badges, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) raise(ErrorCode::IoError, "cannot create directory \"" + dir + "\": " + ec.message());

    std::vector<std::string> paths;
    for (const Badge* badge : badges.all()) {
        const std::filesystem::path path = std::filesystem::path(dir) / badge->filename;
        const std::filesystem::path temp = path.string() + ".tmp";
        {
            std::ofstream file(temp, std::ios::binary | std::ios::trunc);
            file << badge->svg;
            if (!file)
                raise(ErrorCode::IoError, "cannot write \"" + temp.string() + "\"");
        }
        std::filesystem::rename(temp, path, ec);
        if (ec)
            raise(ErrorCode::IoError, "cannot move badge into place at \"" + path.string() +
                                          "\": " + ec.message());
        paths.push_back(path.string());
    }
    return paths;
}

}  // namespace biasgauge

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>

#include "symplane/cli/output.hpp"

namespace symplane::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Bounds {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add(Point p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    [[nodiscard]] bool empty() const { return xmin > xmax; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/// Maps a data rectangle onto a pixel rectangle, y pointing up.
class Frame {
public:
    Frame(Bounds data, double left, double top, double width, double height, bool equal_aspect) {
        if (data.empty()) data = {0.0, 1.0, 0.0, 1.0};
        widen(data.xmin, data.xmax);
        widen(data.ymin, data.ymax);
        const double pad = 0.05;
        double sx = width * (1.0 - 2 * pad) / (data.xmax - data.xmin);
        double sy = height * (1.0 - 2 * pad) / (data.ymax - data.ymin);
        if (equal_aspect) sx = sy = std::min(sx, sy);
        sx_ = sx;
        sy_ = sy;
        cx_data_ = 0.5 * (data.xmin + data.xmax);
        cy_data_ = 0.5 * (data.ymin + data.ymax);
        cx_px_ = left + 0.5 * width;
        cy_px_ = top + 0.5 * height;
    }

    [[nodiscard]] Point map(Point p) const {
        return {cx_px_ + (p.x - cx_data_) * sx_, cy_px_ - (p.y - cy_data_) * sy_};
    }
    [[nodiscard]] double scale() const { return sx_; }

private:
    static void widen(double& lo, double& hi) {
        if (hi - lo > 1e-12 * std::max(1.0, std::abs(hi))) return;
        const double half = std::max(1.0, std::abs(lo)) * 0.5;
        lo -= half;
        hi += half;
    }

    double sx_ = 1.0, sy_ = 1.0;
    double cx_data_ = 0.0, cy_data_ = 0.0;
    double cx_px_ = 0.0, cy_px_ = 0.0;
};

class Svg {
public:
    Svg() {
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
        body_ += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    }

    void polyline(const Frame& f, const std::vector<Point>& pts, const char* stroke, double width = 1.5) {
        if (pts.size() < 2) return;
        body_ += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) +
                 "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point p = f.map(pts[i]);
            if (i) body_ += ' ';
            body_ += num(p.x) + "," + num(p.y);
        }
        body_ += "\"/>\n";
    }

    void circle(const Frame& f, Point c, double r_data, const char* stroke, const char* fill = "none") {
        const Point p = f.map(c);
        body_ += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(std::max(r_data * f.scale(), 2.5)) +
                 "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\"/>\n";
    }

    void rect(double x, double y, double w, double h) {
        body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
                 "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    }

    void text(double x, double y, const std::string& label) {
        body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"13\">" +
                 label + "</text>\n";
    }

    std::string finish() { return body_ + "</svg>\n"; }

private:
    std::string body_;
};

Point pt(const json& pair) { return {pair.at(0).get<double>(), pair.at(1).get<double>()}; }

std::string tangents_svg(const RunReport& report) {
    const json& in = report.input;
    const Point c1 = pt(in.at("c1").at("center")), c2 = pt(in.at("c2").at("center"));
    const double r1 = in.at("c1").at("radius").get<double>(), r2 = in.at("c2").at("radius").get<double>();
    const double d = std::hypot(c2.x - c1.x, c2.y - c1.y);

    Bounds b;
    for (const auto& [c, r] : {std::pair{c1, r1}, std::pair{c2, r2}}) {
        b.add({c.x - r - 0.25 * d, c.y - r - 0.25 * d});
        b.add({c.x + r + 0.25 * d, c.y + r + 0.25 * d});
    }
    const Frame f(b, 0, 0, kWidth, kHeight, true);
    Svg svg;
    svg.circle(f, c1, r1, "#1f77b4");
    svg.circle(f, c2, r2, "#ff7f0e");
    for (const json& t : report.results.at("tangents")) {
        const Point t1 = pt(t.at("touch1")), t2 = pt(t.at("touch2")), e = pt(t.at("direction_e"));
        const Point dir{-e.y, e.x};
        const double ext = 0.25 * d;
        const double lambda = t.at("lambda").get<double>();
        const double sign = lambda < 0.0 ? -1.0 : 1.0;
        const std::vector<Point> seg = {{t1.x - sign * ext * dir.x, t1.y - sign * ext * dir.y},
                                        {t2.x + sign * ext * dir.x, t2.y + sign * ext * dir.y}};
        svg.polyline(f, seg, t.at("kind") == "inner" ? "#2ca02c" : "#d62728");
        svg.circle(f, t1, 0.0, "black", "black");
        svg.circle(f, t2, 0.0, "black", "black");
    }
    svg.text(10, 20, "tangents: " + std::to_string(report.results.at("count").get<int>()));
    return svg.finish();
}

std::string crank_svg(const RunReport& report) {
    static constexpr std::array<const char*, 6> kSeries = {"s", "psi_unwrapped", "s_dot", "psi_dot", "s_ddot",
                                                           "psi_ddot"};
    const json& states = report.results.at("states");
    Svg svg;
    const double pw = kWidth / 2.0, ph = kHeight / 3.0;
    for (std::size_t k = 0; k < kSeries.size(); ++k) {
        const double left = pw * static_cast<double>(k % 2), top = ph * static_cast<double>(k / 2);
        std::vector<std::vector<Point>> runs(1);
        Bounds b;
        for (const json& row : states) {
            const json& v = row.at(kSeries[k]);
            if (v.is_null()) {
                if (!runs.back().empty()) runs.emplace_back();
                continue;
            }
            const Point p{row.at("phi").get<double>(), v.get<double>()};
            runs.back().push_back(p);
            b.add(p);
        }
        const Frame f(b, left + 10, top + 20, pw - 20, ph - 30, false);
        svg.rect(left + 10, top + 20, pw - 20, ph - 30);
        for (const auto& run : runs) svg.polyline(f, run, "#1f77b4");
        svg.text(left + 14, top + 16, std::string(kSeries[k]) + " vs phi");
    }
    return svg.finish();
}

std::string oscillator_svg(const RunReport& report) {
    const json& in = report.input;
    const double m = in.at("mass").get<double>(), k = in.at("stiffness").get<double>();
    const double h0 = report.results.at("energy_initial").get<double>();
    std::vector<Point> ellipse, traj;
    Bounds b;
    for (int i = 0; i <= 256; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 256.0;
        const Point p{std::sqrt(2.0 * h0 / k) * std::cos(th), std::sqrt(2.0 * m * h0) * std::sin(th)};
        ellipse.push_back(p);
        b.add(p);
    }
    for (const json& s : report.results.at("states")) {
        const Point p{s.at("q").get<double>(), s.at("p").get<double>()};
        traj.push_back(p);
        b.add(p);
    }
    const Frame f(b, 0, 0, kWidth, kHeight, true);
    Svg svg;
    svg.polyline(f, ellipse, "#999999", 3.0);
    svg.polyline(f, traj, "#d62728", 1.0);
    svg.text(10, 20, "phase portrait (q, p), " + in.at("method").get<std::string>());
    return svg.finish();
}

}  // namespace

std::string to_svg(const RunReport& report) {
    if (report.subcommand == "tangents") return tangents_svg(report);
    if (report.subcommand == "crank") return crank_svg(report);
    if (report.subcommand == "oscillator") return oscillator_svg(report);
    throw Error(ErrorCode::InvalidArgument, "no plot for subcommand '" + report.subcommand + "'");
}

}  // namespace symplane::cli

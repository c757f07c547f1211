#include "walks/render.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>
#include <vector>

namespace walks::render {

namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 20.0;
constexpr double kOverlapShift = 0.1;

struct Point {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
    double x1, y1, x2, y2;
};

struct Bounds {
    int xmin = 0, xmax = 0, ymin = 0, ymax = 1;
};

std::string num(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    std::string s(buf, res.ptr);
    if (s == "-0.00") {
        s = "0.00";
    }
    return s;
}

std::vector<Point> trace(const Walk& walk, const WalkType& type) {
    if (type.dimension_count() > 2) {
        throw InputError("cannot render walk type " + type.letters() + ": at most 2 dimensions are drawable");
    }
    if (auto v = validate(walk, type)) {
        throw InputError("cannot render invalid walk: step " + std::to_string(v->step_index) + ": " + v->reason());
    }
    std::vector<Point> pts{{0, 0}};
    for (const auto& step : walk.steps) {
        Point p = pts.back();
        (step.dim == 0 ? p.y : p.x) += step.sign;
        pts.push_back(p);
    }
    return pts;
}

Bounds bounds_of(const std::vector<Point>& pts, int pad_x) {
    Bounds b;
    for (const auto& p : pts) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    b.xmin -= pad_x;
    b.xmax += pad_x;
    return b;
}

/// Segments with overlap shifts applied.
std::vector<Segment> segments_of(const std::vector<Point>& pts) {
    std::map<std::pair<Point, Point>, int> used;
    std::vector<Segment> out;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto a = pts[i - 1];
        const auto b = pts[i];
        const int k = used[std::minmax(a, b)]++;
        const double shift = kOverlapShift * k;
        const bool horizontal = a.y == b.y;
        const double dx = horizontal ? 0.0 : shift;
        const double dy = horizontal ? shift : 0.0;
        out.push_back({a.x + dx, a.y + dy, b.x + dx, b.y + dy});
    }
    return out;
}

class SvgCanvas {
public:
    explicit SvgCanvas(Bounds b) : b_(b) {}

    double px(double x) const { return kMargin + (x - b_.xmin) * kUnit; }
    double py(double y) const { return kMargin + (b_.ymax - y) * kUnit; }

    std::string open() const {
        const double w = 2 * kMargin + (b_.xmax - b_.xmin) * kUnit;
        const double h = 2 * kMargin + (b_.ymax - b_.ymin) * kUnit;
        std::string s;
        s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) + "\" height=\"" +
             num(h) + "\" viewBox=\"0.00 0.00 " + num(w) + " " + num(h) + "\">\n";
        s += "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
             "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"context-stroke\"/></marker></defs>\n";
        return s;
    }

    std::string grid() const {
        std::string s = "<g fill=\"#888888\">\n";
        for (int y = b_.ymax; y >= b_.ymin; --y) {
            for (int x = b_.xmin; x <= b_.xmax; ++x) {
                s += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"1.50\"/>\n";
            }
        }
        return s + "</g>\n";
    }

    std::string baseline() const {
        std::string s;
        for (double off : {-0.04, 0.04}) {
            s += "<line x1=\"" + num(px(b_.xmin)) + "\" y1=\"" + num(py(off)) + "\" x2=\"" + num(px(b_.xmax)) +
                 "\" y2=\"" + num(py(off)) + "\" stroke=\"black\" stroke-width=\"1.00\" stroke-dasharray=\"6,4\"/>\n";
        }
        return s;
    }

    std::string arrow(const Segment& seg, const char* colour, bool dashed) const {
        return "<line x1=\"" + num(px(seg.x1)) + "\" y1=\"" + num(py(seg.y1)) + "\" x2=\"" + num(px(seg.x2)) +
               "\" y2=\"" + num(py(seg.y2)) + "\" stroke=\"" + colour + "\" stroke-width=\"2.00\"" +
               (dashed ? " stroke-dasharray=\"4,3\"" : "") + " marker-end=\"url(#head)\"/>\n";
    }

private:
    Bounds b_;
};

class AsciiCanvas {
public:
    AsciiCanvas(int cols, int rows) : cells_(static_cast<std::size_t>(rows), std::string(cols, ' ')) {}

    void put(int col, int row, char c) { cells_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col)) = c; }
    char at(int col, int row) const { return cells_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col)); }

    std::string str() const {
        std::string s;
        for (auto line : cells_) {
            line.erase(line.find_last_not_of(' ') + 1);
            s += line + '\n';
        }
        return s;
    }

private:
    std::vector<std::string> cells_;
};

std::vector<int> dyck_heights(const bijections::DyckPath& path) {
    std::vector<int> h{0};
    for (auto s : path.word()) {
        h.push_back(h.back() + (s == bijections::DyckStep::Up ? 1 : -1));
    }
    return h;
}

}  // namespace

std::string walk_ascii(const Walk& walk, const WalkType& type) {
    const auto pts = trace(walk, type);
    const auto b = bounds_of(pts, 1);
    const int cols = (b.xmax - b.xmin) * 4 + 1;
    const int rows = (b.ymax - b.ymin) * 2 + 1;
    AsciiCanvas canvas(cols, rows);
    auto col = [&](int x) { return (x - b.xmin) * 4; };
    auto row = [&](int y) { return (b.ymax - y) * 2; };

    for (int y = b.ymin; y <= b.ymax; ++y) {
        for (int x = b.xmin; x <= b.xmax; ++x) {
            canvas.put(col(x), row(y), '.');
        }
    }
    for (int c = 0; c < cols; ++c) {
        canvas.put(c, row(0), '=');
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto a = pts[i - 1];
        const auto e = pts[i];
        if (a.y == e.y) {
            const int c0 = std::min(col(a.x), col(e.x));
            for (int c = c0 + 1; c < c0 + 4; ++c) {
                canvas.put(c, row(a.y), '-');
            }
            canvas.put(c0 + 2, row(a.y), e.x > a.x ? '>' : '<');
        } else {
            const int r = std::min(row(a.y), row(e.y)) + 1;
            canvas.put(col(a.x), r, e.y > a.y ? '^' : 'v');
        }
    }
    for (const auto& p : pts) {
        canvas.put(col(p.x), row(p.y), 'o');
    }
    canvas.put(col(pts.back().x), row(pts.back().y), '*');
    canvas.put(col(0), row(0), '@');

    return canvas.str() + "start (0,0) end (" + std::to_string(pts.back().x) + "," + std::to_string(pts.back().y) +
           ") steps " + std::to_string(walk.size()) + "\n";
}

std::string walk_svg(const Walk& walk, const WalkType& type) {
    const auto pts = trace(walk, type);
    const SvgCanvas canvas(bounds_of(pts, 1));
    std::string s = canvas.open() + canvas.grid() + canvas.baseline();
    for (const auto& seg : segments_of(pts)) {
        s += canvas.arrow(seg, "blue", false);
    }
    return s + "</svg>\n";
}

std::string dyck_ascii(const bijections::DyckPath& path) {
    const auto h = dyck_heights(path);
    const int peak = *std::max_element(h.begin(), h.end());
    const int len = static_cast<int>(path.size());
    AsciiCanvas canvas(std::max(len, 1), peak + 1);
    for (int c = 0; c < len; ++c) {
        canvas.put(c, peak, '_');
    }
    for (int i = 0; i < len; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (h[idx + 1] > h[idx]) {
            canvas.put(i, peak - h[idx + 1], '/');
        } else {
            canvas.put(i, peak - h[idx], '\\');
        }
    }
    return canvas.str() + "length " + std::to_string(len) + " peak " + std::to_string(peak) + "\n";
}

std::string dyck_svg(const bijections::DyckPath& path) {
    const auto h = dyck_heights(path);
    Bounds b;
    b.xmax = std::max(static_cast<int>(path.size()), 1);
    b.ymax = std::max(*std::max_element(h.begin(), h.end()), 1);
    const SvgCanvas canvas(b);
    std::string s = canvas.open() + canvas.grid() + canvas.baseline();
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Segment seg{static_cast<double>(i), static_cast<double>(h[i]), static_cast<double>(i + 1),
                          static_cast<double>(h[i + 1])};
        s += canvas.arrow(seg, "red", true);
    }
    return s + "</svg>\n";
}

}  // namespace walks::render

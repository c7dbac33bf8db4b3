#include "kbst/svg.hpp"

#include <algorithm>
#include <set>

#include "kbst/io.hpp"

namespace kbst {

namespace {

struct Frame {
    double x_min, y_max, pad, base;

    double px(double x) const { return x - x_min + pad; }
    double py(double y) const { return y_max - y + pad; }  // SVG y grows downward
};

void append_attr(std::string& out, const char* name, double value) {
    out += " ";
    out += name;
    out += "=\"" + format_double(value) + "\"";
}

}  // namespace

std::string render_svg(const Instance& inst, const SteinerTree& tree) {
    double x_min = inst.point(0).x, x_max = x_min;
    double y_min = inst.point(0).y, y_max = y_min;
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
        const Point& p = inst.point(v);
        x_min = std::min(x_min, p.x);
        x_max = std::max(x_max, p.x);
        y_min = std::min(y_min, p.y);
        y_max = std::max(y_max, p.y);
    }
    double base = std::max(x_max - x_min, y_max - y_min);
    if (base <= 0.0) base = 1.0;  // single point or all coincident
    const Frame frame{x_min, y_max, 0.05 * base, base};
    const double width = (x_max - x_min) + 2.0 * frame.pad;
    const double height = (y_max - y_min) + 2.0 * frame.pad;
    const double marker = 0.015 * base;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      format_double(width) + " " + format_double(height) + "\">\n";

    for (const WeightedEdge& e : tree.edges) {
        const bool is_bottleneck = e.length == tree.bottleneck;
        out += is_bottleneck ? "<line class=\"edge bottleneck\"" : "<line class=\"edge\"";
        append_attr(out, "x1", frame.px(inst.point(e.u).x));
        append_attr(out, "y1", frame.py(inst.point(e.u).y));
        append_attr(out, "x2", frame.px(inst.point(e.v).x));
        append_attr(out, "y2", frame.py(inst.point(e.v).y));
        out += is_bottleneck ? " stroke=\"#c62828\"" : " stroke=\"#546e7a\"";
        append_attr(out, "stroke-width", is_bottleneck ? 0.008 * base : 0.005 * base);
        out += "/>\n";
    }

    const std::set<VertexId> chosen(tree.chosen_steiners.begin(), tree.chosen_steiners.end());
    for (VertexId v = inst.terminal_count(); v < inst.vertex_count(); ++v) {
        if (chosen.count(v)) continue;
        out += "<circle class=\"candidate\"";
        append_attr(out, "cx", frame.px(inst.point(v).x));
        append_attr(out, "cy", frame.py(inst.point(v).y));
        append_attr(out, "r", marker);
        out += " fill=\"none\" stroke=\"#9e9e9e\"";
        append_attr(out, "stroke-width", 0.004 * base);
        out += "/>\n";
    }
    for (VertexId v : tree.chosen_steiners) {
        out += "<rect class=\"chosen\"";
        append_attr(out, "x", frame.px(inst.point(v).x) - marker);
        append_attr(out, "y", frame.py(inst.point(v).y) - marker);
        append_attr(out, "width", 2.0 * marker);
        append_attr(out, "height", 2.0 * marker);
        out += " fill=\"#1565c0\"/>\n";
    }
    for (VertexId v = 0; v < inst.terminal_count(); ++v) {
        out += "<circle class=\"terminal\"";
        append_attr(out, "cx", frame.px(inst.point(v).x));
        append_attr(out, "cy", frame.py(inst.point(v).y));
        append_attr(out, "r", marker);
        out += " fill=\"#212121\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace kbst

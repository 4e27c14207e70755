#include "exponacci/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace exponacci {

std::string fmt17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void SvgBuilder::grow_bounds(Vec2 v) {
    if (!has_bounds_) {
        min_x_ = max_x_ = v.x;
        min_y_ = max_y_ = v.y;
        has_bounds_ = true;
        return;
    }
    if (v.x < min_x_) min_x_ = v.x;
    if (v.x > max_x_) max_x_ = v.x;
    if (v.y < min_y_) min_y_ = v.y;
    if (v.y > max_y_) max_y_ = v.y;
}

void SvgBuilder::add_polyline(const std::vector<Vec2>& points, const std::string& stroke,
                              bool dashed) {
    if (points.empty()) return;
    for (const Vec2& p : points) grow_bounds(p);
    elements_.push_back({Element::Kind::Polyline, points, stroke, dashed});
}

void SvgBuilder::add_segment(Vec2 a, Vec2 b, const std::string& stroke, bool dashed) {
    grow_bounds(a);
    grow_bounds(b);
    elements_.push_back({Element::Kind::Segment, {a, b}, stroke, dashed});
}

void SvgBuilder::add_marker(Vec2 at, const std::string& stroke) {
    grow_bounds(at);
    elements_.push_back({Element::Kind::Marker, {at}, stroke, false});
}

std::string SvgBuilder::str() const {
    double min_x = has_bounds_ ? min_x_ : 0.0;
    double max_x = has_bounds_ ? max_x_ : 1.0;
    double min_y = has_bounds_ ? min_y_ : 0.0;
    double max_y = has_bounds_ ? max_y_ : 1.0;
    double width = max_x - min_x;
    double height = max_y - min_y;
    if (width <= 0.0) width = 1.0;
    if (height <= 0.0) height = 1.0;
    const double margin_x = 0.05 * width;
    const double margin_y = 0.05 * height;
    min_x -= margin_x;
    max_x += margin_x;
    min_y -= margin_y;
    max_y += margin_y;
    width = max_x - min_x;
    height = max_y - min_y;

    const double stroke_width = 0.002 * std::max(width, height);
    const double marker_radius = 0.01 * std::max(width, height);
    const double dash = 6.0 * stroke_width;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // The group flips y so data coordinates read math-up; the viewBox is the
    // flipped image of the padded data bounds.
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt17(min_x)
       << " " << fmt17(-max_y) << " " << fmt17(width) << " " << fmt17(height) << "\">\n";
    os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << fmt17(stroke_width)
       << "\">\n";
    for (const Element& el : elements_) {
        switch (el.kind) {
        case Element::Kind::Polyline: {
            os << "<polyline stroke=\"" << el.stroke << "\"";
            if (el.dashed) os << " stroke-dasharray=\"" << fmt17(dash) << "\"";
            os << " points=\"";
            for (std::size_t i = 0; i < el.points.size(); ++i) {
                if (i) os << " ";
                os << fmt17(el.points[i].x) << "," << fmt17(el.points[i].y);
            }
            os << "\"/>\n";
            break;
        }
        case Element::Kind::Segment: {
            os << "<line stroke=\"" << el.stroke << "\"";
            if (el.dashed) os << " stroke-dasharray=\"" << fmt17(dash) << "\"";
            os << " x1=\"" << fmt17(el.points[0].x) << "\" y1=\"" << fmt17(el.points[0].y)
               << "\" x2=\"" << fmt17(el.points[1].x) << "\" y2=\"" << fmt17(el.points[1].y)
               << "\"/>\n";
            break;
        }
        case Element::Kind::Marker: {
            os << "<circle stroke=\"" << el.stroke << "\" cx=\"" << fmt17(el.points[0].x)
               << "\" cy=\"" << fmt17(el.points[0].y) << "\" r=\"" << fmt17(marker_radius)
               << "\"/>\n";
            break;
        }
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace exponacci

#pragma once

#include <string>
#include <vector>

#include "exponacci/spiral.hpp"

namespace exponacci {

/// Round-trip-safe text form of a double: 17 significant digits.
std::string fmt17(double value);

/// Minimal SVG 1.1 document builder. Elements are emitted in insertion order
/// inside a single group that flips the y axis, so the coordinates written
/// here are plain mathematical data coordinates. The viewBox is the data
/// bounding box with a 5% margin.
class SvgBuilder {
public:
    void add_polyline(const std::vector<Vec2>& points, const std::string& stroke,
                      bool dashed = false);
    void add_segment(Vec2 a, Vec2 b, const std::string& stroke, bool dashed = false);
    void add_marker(Vec2 at, const std::string& stroke);

    /// Serializes the document. Returns a placeholder rectangle when empty.
    std::string str() const;

private:
    struct Element {
        enum class Kind { Polyline, Segment, Marker } kind;
        std::vector<Vec2> points;
        std::string stroke;
        bool dashed = false;
    };

    void grow_bounds(Vec2 v);

    std::vector<Element> elements_;
    bool has_bounds_ = false;
    double min_x_ = 0.0, max_x_ = 0.0, min_y_ = 0.0, max_y_ = 0.0;
};

} // namespace exponacci

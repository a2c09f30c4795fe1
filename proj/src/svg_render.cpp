#include "segstab/svg_render.h"

#include <algorithm>
#include <sstream>

namespace segstab {

namespace {

struct Mapper {
    double scale = 1.0;
    double xoff = 0.0, yoff = 0.0;
    double height = 1000.0;

    double sx(double x) const { return xoff + x * scale; }
    double sy(double y) const { return height - (yoff + y * scale); }
};

void write_capsule(std::ostringstream& os, const Mapper& m, const Capsule& c) {
    double rs = c.r * m.scale;
    if (c.seg.length() == 0.0) {
        os << "<circle cx=\"" << m.sx(c.seg.a.x) << "\" cy=\""
           << m.sy(c.seg.a.y) << "\" r=\"" << rs
           << "\" fill=\"none\" stroke=\"gray\" stroke-opacity=\"0.3\"/>\n";
        return;
    }
    Point u = c.seg.direction();
    Point n = u.perp();
    Point p1 = c.seg.a + n * c.r;
    Point p2 = c.seg.b + n * c.r;
    Point p3 = c.seg.b - n * c.r;
    Point p4 = c.seg.a - n * c.r;
    os << "<path d=\"M " << m.sx(p1.x) << " " << m.sy(p1.y) << " L "
       << m.sx(p2.x) << " " << m.sy(p2.y) << " A " << rs << " " << rs
       << " 0 0 0 " << m.sx(p3.x) << " " << m.sy(p3.y) << " L " << m.sx(p4.x)
       << " " << m.sy(p4.y) << " A " << rs << " " << rs << " 0 0 0 "
       << m.sx(p1.x) << " " << m.sy(p1.y)
       << " Z\" fill=\"none\" stroke=\"gray\" stroke-opacity=\"0.3\"/>\n";
}

}  // namespace

std::string render_svg(const PlaneGraphInstance& inst,
                       const std::vector<Point>& solution_points) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    auto grow = [&](const Point& p, double pad) {
        if (first) {
            xmin = p.x - pad;
            xmax = p.x + pad;
            ymin = p.y - pad;
            ymax = p.y + pad;
            first = false;
            return;
        }
        xmin = std::min(xmin, p.x - pad);
        xmax = std::max(xmax, p.x + pad);
        ymin = std::min(ymin, p.y - pad);
        ymax = std::max(ymax, p.y + pad);
    };
    for (const Point& p : inst.vertices) grow(p, inst.r);
    for (const Point& p : solution_points) grow(p, inst.r);

    double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    Mapper m;
    m.scale = 900.0 / span;  // 5% margin on each side of the 1000 box
    m.xoff = 50.0 - xmin * m.scale;
    m.yoff = 50.0 - ymin * m.scale;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 "
          "1000\">\n";
    for (std::size_t e = 0; e < inst.edges.size(); ++e)
        write_capsule(os, m, inst.capsule(static_cast<int>(e)));
    for (const Point& p : solution_points)
        os << "<circle cx=\"" << m.sx(p.x) << "\" cy=\"" << m.sy(p.y)
           << "\" r=\"" << inst.r * m.scale
           << "\" fill=\"blue\" fill-opacity=\"0.2\"/>\n";
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        Segment s = inst.segment(static_cast<int>(e));
        os << "<path d=\"M " << m.sx(s.a.x) << " " << m.sy(s.a.y) << " L "
           << m.sx(s.b.x) << " " << m.sy(s.b.y)
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const Point& p : solution_points)
        os << "<circle cx=\"" << m.sx(p.x) << "\" cy=\"" << m.sy(p.y)
           << "\" r=\"3\" fill=\"red\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace segstab

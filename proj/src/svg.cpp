#include "hilbcone/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilbcone {

namespace {

struct Pt {
  Rational x;
  Rational y;
  friend bool operator==(const Pt&, const Pt&) = default;
};

bool pt_less(const Pt& a, const Pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Rational cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Section point paired with its representative on the plane normal . v = 1.
struct Node {
  Pt p;
  Vec v;
};

// Counter-clockwise convex hull (monotone chain), collinear points dropped.
std::vector<Node> hull(std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return pt_less(a.p, b.p); });
  nodes.erase(std::unique(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.p == b.p; }),
              nodes.end());
  if (nodes.size() < 3) return nodes;
  std::vector<Node> h(2 * nodes.size());
  std::size_t k = 0;
  for (const auto& n : nodes) {
    while (k >= 2 && cross(h[k - 2].p, h[k - 1].p, n.p) <= 0) --k;
    h[k++] = n;
  }
  for (std::size_t i = nodes.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2].p, h[k - 1].p, nodes[i].p) <= 0) --k;
    h[k++] = nodes[i];
  }
  h.resize(k - 1);
  return h;
}

class Canvas {
 public:
  Canvas(const std::vector<Pt>& extent, Rational margin) {
    Rational xmin = extent.front().x, xmax = xmin, ymin = extent.front().y, ymax = ymin;
    for (const auto& p : extent) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    const Rational usable = Rational(kCanvasSize) - 2 * margin;
    const Rational w = xmax - xmin;
    const Rational h = ymax - ymin;
    if (w == 0 && h == 0)
      scale_ = 1;
    else if (w == 0)
      scale_ = usable / h;
    else if (h == 0)
      scale_ = usable / w;
    else
      scale_ = std::min(usable / w, usable / h);
    cx_ = (xmin + xmax) / 2;
    cy_ = (ymin + ymax) / 2;
  }

  Pt map(const Pt& p) const {
    const Rational half(kCanvasSize / 2);
    return Pt{half + scale_ * (p.x - cx_), half - scale_ * (p.y - cy_)};
  }

 private:
  Rational scale_;
  Rational cx_;
  Rational cy_;
};

std::string num(const Rational& q) { return to_decimal(q, 1); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string polygon(const std::vector<Pt>& pts, const std::string& style) {
  std::ostringstream os;
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << num(pts[i].x) << ',' << num(pts[i].y);
  os << "\" " << style << "/>\n";
  return os.str();
}

std::string line(const Pt& a, const Pt& b, const std::string& style) {
  return "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) +
         "\" " + style + "/>\n";
}

std::string mark(const Pt& p, const std::string& label) {
  return "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"4\" fill=\"#000000\"/>\n" +
         "  <text x=\"" + num(p.x + 8) + "\" y=\"" + num(p.y - 8) +
         "\" font-family=\"sans-serif\" font-size=\"16\">" + escape(label) + "</text>\n";
}

const char* kShadeStyle = "fill=\"#d0d0d0\" stroke=\"none\"";
const char* kOutlineStyle = "fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"";
const char* kWallStyle = "stroke=\"#555555\" stroke-width=\"1\"";
const char* kRayStyle = "stroke=\"#000000\" stroke-width=\"2\"";
const char* kWallRayStyle = "stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6,4\"";

std::string header(const WallSet& w) {
  std::string title = w.surface.empty() ? "cone" : w.surface;
  if (w.n > 0) title += " n=" + std::to_string(w.n);
  const std::string size = std::to_string(kCanvasSize);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n  <title>" + escape(title) + "</title>\n" +
         "  <rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n";
}

// Rank 3: everything lives on the section plane.
std::string render_section(const Fixture& f) {
  const Section sec = f.section.value_or(default_section());
  auto project = [&](const Vec& v) {
    const Rational t = dot(sec.normal, v);
    if (t <= 0) {
      std::string coords;
      for (const auto& q : v) coords += (coords.empty() ? "" : ",") + to_string(q);
      throw std::invalid_argument("section plane does not meet the ray (" + coords + ")");
    }
    const Vec u = scale(1 / t, v);
    return Node{Pt{dot(sec.x, u), dot(sec.y, u)}, u};
  };

  std::vector<Node> bound;
  for (const auto& g : f.walls.bounding_cone.generators()) bound.push_back(project(g));
  if (bound.empty()) throw std::invalid_argument("bounding cone is empty");
  bound = hull(bound);

  std::vector<Pt> extent;
  for (const auto& n : bound) extent.push_back(n.p);
  std::vector<Node> marks;
  for (const auto& m : f.marks) {
    marks.push_back(project(m.cls));
    extent.push_back(marks.back().p);
  }
  const Canvas canvas(extent, Rational(60));

  std::string out = header(f.walls);
  if (!f.shaded.empty()) {
    std::vector<Node> shade;
    for (const auto& v : f.shaded) shade.push_back(project(v));
    std::vector<Pt> pts;
    for (const auto& n : hull(shade)) pts.push_back(canvas.map(n.p));
    out += polygon(pts, kShadeStyle);
  }
  {
    std::vector<Pt> pts;
    for (const auto& n : bound) pts.push_back(canvas.map(n.p));
    out += pts.size() >= 3 ? polygon(pts, kOutlineStyle)
                           : line(pts.front(), pts.back(), kOutlineStyle);
  }
  for (const auto& w : f.walls.walls) {
    std::vector<Pt> hits;
    const std::size_t m = bound.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Node& a = bound[i];
      const Node& b = bound[(i + 1) % m];
      const Rational fa = dot(w.functional, a.v);
      const Rational fb = dot(w.functional, b.v);
      if (fa == 0) hits.push_back(a.p);
      if (fa * fb < 0) {
        const Rational t = fa / (fa - fb);
        hits.push_back(Pt{a.p.x + t * (b.p.x - a.p.x), a.p.y + t * (b.p.y - a.p.y)});
      }
    }
    std::sort(hits.begin(), hits.end(), pt_less);
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() < 2) continue;
    out += line(canvas.map(hits.front()), canvas.map(hits.back()), kWallStyle);
  }
  for (std::size_t i = 0; i < marks.size(); ++i) out += mark(canvas.map(marks[i].p), f.marks[i].label);
  out += "</svg>\n";
  return out;
}

// Rank 2: a fan around the canvas centre, rays scaled to unit sup-norm.
std::string render_fan(const Fixture& f) {
  const Rational radius(240);
  const Rational half(kCanvasSize / 2);
  auto tip = [&](const Vec& v) {
    const Rational norm = std::max(abs(v[0]), abs(v[1]));
    if (norm == 0) throw std::invalid_argument("cannot draw the zero class");
    return Pt{half + radius * v[0] / norm, half - radius * v[1] / norm};
  };
  const Pt centre{half, half};
  const Cone& cone = f.walls.bounding_cone;

  std::string out = header(f.walls);
  if (!f.shaded.empty()) {
    const Cone shade = Cone::from_generators(2, f.shaded);
    std::vector<Pt> pts{centre};
    for (const auto& g : shade.generators()) pts.push_back(tip(g));
    if (pts.size() >= 3) out += polygon(pts, kShadeStyle);
  }
  for (const auto& g : cone.generators()) out += line(centre, tip(g), kRayStyle);
  for (const auto& w : f.walls.walls) {
    const Vec d{-w.functional[1], w.functional[0]};
    for (const Vec& dir : {d, scale(Rational(-1), d)})
      if (cone.contains(dir)) out += line(centre, tip(dir), kWallRayStyle);
  }
  for (const auto& m : f.marks) out += mark(tip(m.cls), m.label);
  out += "</svg>\n";
  return out;
}

}  // namespace

Section default_section() {
  return Section{Vec{1, 1, 1}, Vec{-1, 1, 0}, Vec{Rational(-1, 2), Rational(-1, 2), Rational(1)}};
}

std::string cross_section_svg(const Fixture& f) {
  switch (f.walls.bounding_cone.ambient_dim()) {
    case 2: return render_fan(f);
    case 3: return render_section(f);
    default:
      throw std::invalid_argument("cross sections need a rank 2 or rank 3 wall set, got rank " +
                                  std::to_string(f.walls.bounding_cone.ambient_dim()));
  }
}

}  // namespace hilbcone

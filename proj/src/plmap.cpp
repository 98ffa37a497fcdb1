#include "pmvw/plmap.hpp"

#include <algorithm>

#include "pmvw/error.hpp"

namespace pmvw {

namespace {

bool collinear(const PlMap::Point& a, const PlMap::Point& b, const PlMap::Point& c) {
  return (b.second - a.second) * (c.first - a.first) ==
         (c.second - a.second) * (b.first - a.first);
}

Rat segment_slope(const PlMap::Point& a, const PlMap::Point& b) {
  return (b.second - a.second) / (b.first - a.first);
}

}  // namespace

PlMap PlMap::translation(Rat c) {
  if (c == 0) return PlMap();
  std::vector<Point> pts;
  pts.emplace_back(Rat(0), std::move(c));
  return PlMap(std::move(pts));
}

PlMap PlMap::from_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.first < b.first; });
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i - 1].first == pts[i].first)
      throw PreconditionError("PL map: duplicate breakpoint x-coordinate " +
                              format_rat(pts[i].first));
    if (!(pts[i - 1].second < pts[i].second))
      throw PreconditionError("PL map: values must be strictly increasing at x = " +
                              format_rat(pts[i].first));
  }
  PlMap m(std::move(pts));
  m.canonicalize();
  return m;
}

void PlMap::canonicalize() {
  if (pts_.size() >= 3) {
    std::vector<Point> kept;
    kept.reserve(pts_.size());
    for (const Point& p : pts_) {
      while (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), p))
        kept.pop_back();
      kept.push_back(p);
    }
    pts_ = std::move(kept);
  }
  // Slope-1 boundary segments merge into the tails.
  while (pts_.size() >= 2 && segment_slope(pts_[0], pts_[1]) == 1)
    pts_.erase(pts_.begin());
  while (pts_.size() >= 2 && segment_slope(pts_[pts_.size() - 2], pts_.back()) == 1)
    pts_.pop_back();
  if (pts_.size() == 1) {
    Rat off = pts_[0].second - pts_[0].first;
    pts_.clear();
    if (off != 0) pts_.emplace_back(Rat(0), off);
  }
}

Rat PlMap::left_offset() const {
  if (pts_.empty()) return Rat(0);
  return pts_.front().second - pts_.front().first;
}

Rat PlMap::right_offset() const {
  if (pts_.empty()) return Rat(0);
  return pts_.back().second - pts_.back().first;
}

Rat PlMap::operator()(const Rat& t) const {
  if (pts_.empty()) return t;
  if (t <= pts_.front().first) return t + left_offset();
  if (t >= pts_.back().first) return t + right_offset();
  auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                             [](const Rat& v, const Point& p) { return v < p.first; });
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lo.second + (t - lo.first) * (hi.second - lo.second) / (hi.first - lo.first);
}

PlMap PlMap::inverse() const {
  std::vector<Point> pts;
  pts.reserve(pts_.size());
  for (const Point& p : pts_) pts.emplace_back(p.second, p.first);
  PlMap m(std::move(pts));
  m.canonicalize();
  return m;
}

PlMap PlMap::compose(const PlMap& first, const PlMap& then) {
  // Breakpoints of then∘first sit at first's breakpoints and at preimages of
  // then's; {0} keeps the grid nonempty so translations survive.
  std::vector<Rat> grid{Rat(0)};
  for (const Point& p : first.pts_) grid.push_back(p.first);
  PlMap inv = first.inverse();
  for (const Point& p : then.pts_) grid.push_back(inv(p.first));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Point> pts;
  pts.reserve(grid.size());
  for (const Rat& x : grid) pts.emplace_back(x, then(first(x)));
  PlMap m(std::move(pts));
  m.canonicalize();
  return m;
}

namespace {

std::vector<Rat> merged_grid(const PlMap& f, const PlMap& g, bool with_crossings) {
  std::vector<Rat> grid{Rat(0)};
  for (const auto& p : f.points()) grid.push_back(p.first);
  for (const auto& p : g.points()) grid.push_back(p.first);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (!with_crossings) return grid;
  std::vector<Rat> out;
  for (size_t i = 0; i < grid.size(); ++i) {
    out.push_back(grid[i]);
    if (i + 1 == grid.size()) break;
    // Both maps are linear between adjacent grid points; a strict sign change
    // of f-g inside the interval adds one crossing breakpoint.
    Rat da = f(grid[i]) - g(grid[i]);
    Rat db = f(grid[i + 1]) - g(grid[i + 1]);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      Rat x = grid[i] + (grid[i + 1] - grid[i]) * da / (da - db);
      out.push_back(x);
    }
  }
  return out;
}

PlMap pointwise_extremum(const PlMap& f, const PlMap& g, bool take_max) {
  std::vector<Rat> grid = merged_grid(f, g, true);
  std::vector<PlMap::Point> pts;
  pts.reserve(grid.size());
  for (const Rat& x : grid) {
    Rat fx = f(x);
    Rat gx = g(x);
    bool pick_f = take_max ? fx >= gx : fx <= gx;
    pts.emplace_back(x, pick_f ? fx : gx);
  }
  return PlMap::from_points(std::move(pts));
}

}  // namespace

PlMap PlMap::pointwise_max(const PlMap& f, const PlMap& g) {
  return pointwise_extremum(f, g, true);
}

PlMap PlMap::pointwise_min(const PlMap& f, const PlMap& g) {
  return pointwise_extremum(f, g, false);
}

bool PlMap::leq(const PlMap& f, const PlMap& g) {
  // Piecewise linear between grid points and constant difference on the
  // tails, so the grid values decide.
  for (const Rat& x : merged_grid(f, g, false))
    if (f(x) > g(x)) return false;
  return true;
}

Rat PlMap::min_displacement() const {
  Rat best = left_offset();
  for (const Point& p : pts_) {
    Rat d = p.second - p.first;
    if (d < best) best = d;
  }
  Rat r = right_offset();
  return r < best ? r : best;
}

Rat PlMap::max_displacement() const {
  Rat best = left_offset();
  for (const Point& p : pts_) {
    Rat d = p.second - p.first;
    if (d > best) best = d;
  }
  Rat r = right_offset();
  return r > best ? r : best;
}

std::string PlMap::format() const {
  if (pts_.empty()) return "id";
  if (pts_.size() == 1) return "translate(" + format_rat(left_offset()) + ")";
  std::string out = "pl(";
  for (size_t i = 0; i < pts_.size(); ++i) {
    if (i) out += ",";
    out += "(" + format_rat(pts_[i].first) + "," + format_rat(pts_[i].second) + ")";
  }
  return out + ")";
}

PlMap PlMap::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw ParseError("empty PL literal");
  std::string body(text.substr(begin, end - begin + 1));
  if (body == "id") return PlMap();
  auto expect_wrapped = [&](const std::string& head) -> std::string {
    if (body.rfind(head + "(", 0) != 0 || body.back() != ')')
      throw ParseError("malformed PL literal: '" + body + "'");
    return body.substr(head.size() + 1, body.size() - head.size() - 2);
  };
  if (body.rfind("translate", 0) == 0) return translation(parse_rat(expect_wrapped("translate")));
  if (body.rfind("pl", 0) == 0) {
    std::string inner = expect_wrapped("pl");
    std::vector<Point> pts;
    size_t i = 0;
    while (i < inner.size()) {
      if (inner[i] == ',' || inner[i] == ' ') {
        ++i;
        continue;
      }
      if (inner[i] != '(') throw ParseError("malformed PL point list: '" + body + "'");
      size_t close = inner.find(')', i);
      if (close == std::string::npos) throw ParseError("unbalanced PL point: '" + body + "'");
      std::string pair = inner.substr(i + 1, close - i - 1);
      size_t comma = pair.find(',');
      if (comma == std::string::npos) throw ParseError("PL point needs x,y: '" + body + "'");
      pts.emplace_back(parse_rat(pair.substr(0, comma)), parse_rat(pair.substr(comma + 1)));
      i = close + 1;
    }
    return from_points(std::move(pts));
  }
  throw ParseError("malformed PL literal: '" + body + "'");
}

}  // namespace pmvw

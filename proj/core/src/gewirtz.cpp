#include "at4kit/graphcheck.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <map>
#include <stdexcept>

namespace at4kit::graphcheck {

namespace {

// GF(4) = {0, 1, w, w^2} encoded 0..3; addition is XOR.
constexpr std::array<std::array<std::uint8_t, 4>, 4> kMul{{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
constexpr std::array<std::uint8_t, 4> kInv{0, 1, 3, 2};
constexpr std::array<std::uint8_t, 4> kFrobenius{0, 1, 3, 2};

using Vec = std::array<std::uint8_t, 3>;
using Mat = std::array<Vec, 3>;
using Oval = std::array<int, 6>;

std::uint8_t dot(const Vec& a, const Vec& b)
{
  return kMul[a[0]][b[0]] ^ kMul[a[1]][b[1]] ^ kMul[a[2]][b[2]];
}

Vec normalize(Vec x)
{
  for (auto c : x) {
    if (c != 0) {
      auto inv = kInv[c];
      for (auto& y : x)
        y = kMul[inv][y];
      return x;
    }
  }
  throw std::logic_error("normalize: zero vector");
}

struct Plane {
  std::vector<Vec> points;
  std::map<Vec, int> index;
  // line_through[a][b]: every point on the line through a and b
  std::vector<std::vector<std::vector<int>>> line_through;

  Plane()
  {
    for (std::uint8_t a = 0; a < 4; ++a) {
      for (std::uint8_t b = 0; b < 4; ++b) {
        for (std::uint8_t c = 0; c < 4; ++c) {
          Vec x{a, b, c};
          if ((a || b || c) && normalize(x) == x) {
            index[x] = static_cast<int>(points.size());
            points.push_back(x);
          }
        }
      }
    }
    const auto n = points.size();
    line_through.assign(n, std::vector<std::vector<int>>(n));
    for (const auto& line : points) {
      std::vector<int> on;
      for (std::size_t i = 0; i < n; ++i) {
        if (dot(points[i], line) == 0)
          on.push_back(static_cast<int>(i));
      }
      for (int a : on) {
        for (int b : on) {
          if (a != b)
            line_through[a][b] = on;
        }
      }
    }
  }

  int image(const Mat& m, int point) const
  {
    const auto& x = points[point];
    Vec y{};
    for (int r = 0; r < 3; ++r)
      y[r] = dot(m[r], x);
    return index.at(normalize(y));
  }

  int frobenius(int point) const
  {
    Vec y = points[point];
    for (auto& c : y)
      c = kFrobenius[c];
    return index.at(normalize(y));
  }
};

void extend_arcs(const Plane& plane, std::vector<int>& chosen, std::vector<Oval>& out)
{
  if (chosen.size() == 6) {
    Oval o;
    std::copy(chosen.begin(), chosen.end(), o.begin());
    out.push_back(o);
    return;
  }
  const int start = chosen.empty() ? 0 : chosen.back() + 1;
  for (int x = start; x < static_cast<int>(plane.points.size()); ++x) {
    bool blocked = false;
    for (std::size_t i = 0; i < chosen.size() && !blocked; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && !blocked; ++j) {
        const auto& line = plane.line_through[chosen[i]][chosen[j]];
        blocked = std::find(line.begin(), line.end(), x) != line.end();
      }
    }
    if (!blocked) {
      chosen.push_back(x);
      extend_arcs(plane, chosen, out);
      chosen.pop_back();
    }
  }
}

template <class Map>
Oval map_oval(const Oval& o, Map f)
{
  Oval out;
  for (int i = 0; i < 6; ++i)
    out[i] = f(o[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat> sl3_generators()
{
  std::vector<Mat> gens;
  const Mat id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      for (std::uint8_t a = 1; a < 4; ++a) {
        Mat m = id;
        m[i][j] = a;
        gens.push_back(m);
      }
    }
  }
  // coordinate permutations have determinant 1 in characteristic 2
  std::array<int, 3> perm{0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    Mat m{};
    for (int r = 0; r < 3; ++r)
      m[r][perm[r]] = 1;
    gens.push_back(m);
  }
  return gens;
}

}  // namespace

GewirtzConstruction construct_gewirtz()
{
  const Plane plane;
  std::vector<Oval> all;
  std::vector<int> chosen;
  extend_arcs(plane, chosen, all);

  std::vector<std::function<int(int)>> actions;
  for (const auto& m : sl3_generators())
    actions.emplace_back([&plane, m](int x) { return plane.image(m, x); });

  // partition the hyperovals into orbits of the group generated by `actions`
  std::map<Oval, int> orbit_of;
  std::vector<std::vector<Oval>> orbits;
  for (const auto& seed : all) {
    if (orbit_of.count(seed))
      continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<Oval> orbit{seed};
    orbit_of[seed] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& act : actions) {
        auto next = map_oval(orbit[head], act);
        if (orbit_of.emplace(next, id).second)
          orbit.push_back(next);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  for (const auto& orbit : orbits) {
    if (orbit.size() != 56)
      continue;
    std::map<Oval, Vertex> vertex;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      vertex[orbit[i]] = static_cast<Vertex>(i);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < orbit.size(); ++a) {
      for (Vertex b = a + 1; b < orbit.size(); ++b) {
        std::vector<int> common;
        std::set_intersection(orbit[a].begin(), orbit[a].end(), orbit[b].begin(), orbit[b].end(),
                              std::back_inserter(common));
        if (common.empty())
          edges.emplace_back(a, b);
      }
    }
    Graph g(orbit.size(), edges);
    auto params = verify_srg(g);
    if (!params || *params != srg::SrgParams{56, 10, 0, 2})
      continue;

    auto induced = [&](const std::function<int(int)>& act) -> std::optional<Permutation> {
      std::vector<Vertex> images;
      for (const auto& o : orbit) {
        auto it = vertex.find(map_oval(o, act));
        if (it == vertex.end())
          return std::nullopt;
        images.push_back(it->second);
      }
      return Permutation(std::move(images));
    };

    GewirtzConstruction out;
    out.graph = std::move(g);
    out.hyperovals_total = all.size();
    out.class_count = orbits.size();
    actions.emplace_back([&plane](int x) { return plane.frobenius(x); });
    for (const auto& act : actions) {
      if (auto perm = induced(act); perm && !perm->is_identity() &&
          std::find(out.symmetries.begin(), out.symmetries.end(), *perm) == out.symmetries.end())
        out.symmetries.push_back(std::move(*perm));
    }
    return out;
  }
  throw std::runtime_error("construct_gewirtz: no hyperoval class yields SRG(56,10,0,2)");
}

Graph generate_gewirtz()
{
  return construct_gewirtz().graph;
}

}  // namespace at4kit::graphcheck

#include "at4kit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace at4kit::graphcheck {

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), adj_(n * n, 0), nbrs_(n)
{
  for (auto [a, b] : edges) {
    if (a >= n || b >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (a == b)
      throw std::invalid_argument("Graph: loop at vertex " + std::to_string(a));
    if (adj_[a * n + b])
      continue;
    adj_[a * n + b] = adj_[b * n + a] = 1;
    nbrs_[a].push_back(b);
    nbrs_[b].push_back(a);
    ++edges_;
  }
  for (auto& row : nbrs_)
    std::sort(row.begin(), row.end());
}

bool Graph::connected() const
{
  if (n_ == 0)
    return true;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : nbrs_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n_;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const
{
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(vertices.size(), edges);
}

Permutation::Permutation(std::vector<Vertex> images)
    : images_(std::move(images))
{
  std::vector<bool> hit(images_.size(), false);
  for (Vertex x : images_) {
    if (x >= images_.size() || hit[x])
      throw std::invalid_argument("Permutation: not a bijection on 0.." + std::to_string(images_.size()) + "-1");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("Permutation product: size mismatch");
  std::vector<Vertex> images(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    images[x] = b.images_[a.images_[x]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::inverse() const
{
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<Vertex>(x);
  return out;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return false;
  }
  return true;
}

std::uint64_t Permutation::order() const
{
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<Vertex> Permutation::fixed_points() const
{
  std::vector<Vertex> out;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] == x)
      out.push_back(static_cast<Vertex>(x));
  }
  return out;
}

namespace {

std::string_view strip(std::string_view line)
{
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
    line.remove_prefix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> tokens(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line, const char* what)
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

LoadedGraph load_graph(std::istream& in)
{
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::set<std::pair<Vertex, Vertex>> listed;

  while (std::getline(in, raw)) {
    ++lineno;
    auto line = strip(raw);
    if (line.empty())
      continue;
    if (!n) {
      auto t = tokens(line);
      if (t.size() != 2 || t[0] != "n")
        throw ParseError(lineno, "expected header 'n <count>'");
      n = parse_index(t[1], lineno, "vertex count");
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(lineno, "expected '<vertex>: <neighbours>'");
    auto head = tokens(line.substr(0, colon));
    if (head.size() != 1)
      throw ParseError(lineno, "expected a single vertex before ':'");
    std::size_t a = parse_index(head[0], lineno, "vertex");
    if (a >= *n)
      throw ParseError(lineno, "vertex " + std::to_string(a) + " out of range");
    for (auto tok : tokens(line.substr(colon + 1))) {
      std::size_t b = parse_index(tok, lineno, "neighbour");
      if (b >= *n)
        throw ParseError(lineno, "neighbour " + std::to_string(b) + " out of range");
      if (a == b)
        throw ParseError(lineno, "loop at vertex " + std::to_string(a));
      listed.emplace(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!n)
    throw ParseError(lineno, "missing header 'n <count>'");

  LoadedGraph out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : listed) {
    if (!listed.count({b, a}))
      out.asymmetries.push_back(std::to_string(a) + " lists " + std::to_string(b) + " but not conversely");
    if (a < b || !listed.count({b, a}))
      edges.emplace_back(a, b);
  }
  out.graph = Graph(*n, edges);
  return out;
}

LoadedGraph load_graph(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

std::string write_graph(const Graph& g)
{
  std::string out = "n " + std::to_string(g.size()) + "\n";
  for (Vertex a = 0; a < g.size(); ++a) {
    out += std::to_string(a) + ":";
    for (Vertex b : g.neighbours(a))
      out += " " + std::to_string(b);
    out += "\n";
  }
  return out;
}

std::vector<Permutation> load_permutations(std::istream& in, std::size_t n)
{
  std::vector<Permutation> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = strip(raw);
    if (line.empty())
      continue;
    auto t = tokens(line);
    if (t.size() != n)
      throw ParseError(lineno, "expected " + std::to_string(n) + " images, got " + std::to_string(t.size()));
    std::vector<Vertex> images;
    images.reserve(n);
    for (auto tok : t)
      images.push_back(static_cast<Vertex>(parse_index(tok, lineno, "image")));
    try {
      out.emplace_back(std::move(images));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

std::vector<Permutation> load_permutations(std::string_view text, std::size_t n)
{
  std::istringstream in{std::string(text)};
  return load_permutations(in, n);
}

std::string write_permutation(const Permutation& p)
{
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += " ";
    out += std::to_string(p(static_cast<Vertex>(i)));
  }
  return out + "\n";
}

std::string write_permutations(const std::vector<Permutation>& perms)
{
  std::string out;
  for (const auto& p : perms)
    out += write_permutation(p);
  return out;
}

}  // namespace at4kit::graphcheck

#include "decycle/instance.hpp"

#include <charconv>
#include <stdexcept>

#include "decycle/graph_io.hpp"
#include "decycle/product.hpp"
#include "decycle/tree_enum.hpp"

namespace decycle {

namespace {

constexpr std::string_view kTimes = " x ";

Graph factor_from_key(std::string_view part) {
  if (part.empty()) throw std::invalid_argument("empty instance descriptor");
  if (part.front() == '(') return tree_from_code(TreeCode{std::string(part)});
  if (part.substr(0, 3) == "g6:") return from_graph6(part.substr(3));
  if (part.front() == 'C') {
    int n = 0;
    const auto* first = part.data() + 1;
    const auto* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && first != last) return make_cycle(n);
  }
  throw std::invalid_argument("unrecognized instance descriptor \"" + std::string(part) + "\"");
}

}  // namespace

Instance tree_instance(const Graph& t) {
  auto code = canonical_code(t);
  Graph g = tree_from_code(code);
  return {std::move(code.bytes), std::move(g)};
}

Instance cycle_instance(int n) { return {"C" + std::to_string(n), make_cycle(n)}; }

Instance graph6_instance(const Graph& g) { return {"g6:" + to_graph6(g), g}; }

Instance product_instance(const Instance& a, const Instance& b) {
  return {a.key + std::string(kTimes) + b.key, cartesian_product(a.graph, b.graph)};
}

Graph graph_from_key(std::string_view key) {
  const auto pos = key.find(kTimes);
  if (pos == std::string_view::npos) return factor_from_key(key);
  const auto rest = key.substr(pos + kTimes.size());
  if (rest.find(kTimes) != std::string_view::npos)
    throw std::invalid_argument("descriptor names more than two factors");
  return cartesian_product(factor_from_key(key.substr(0, pos)), factor_from_key(rest));
}

}  // namespace decycle

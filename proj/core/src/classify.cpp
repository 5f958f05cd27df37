#include "estrada/classify.hpp"

#include <algorithm>
#include <numeric>

#include "estrada/error.hpp"

namespace estrada {
namespace {

__extension__ typedef unsigned __int128 u128;

bool same_ratio(std::uint64_t a_num, std::uint64_t a_den, std::uint64_t b_num,
                std::uint64_t b_den) {
  return static_cast<u128>(a_num) * b_den == static_cast<u128>(b_num) * a_den;
}

bool less_ratio(const Ratio& a, const Ratio& b) {
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

std::vector<std::uint64_t> exact_counts(const Graph& g, std::size_t k) {
  auto v = k_degrees(g, k);
  if (!v.exact()) throw InputError("walk counts too large for exact classification");
  return std::move(*v.counts);
}

// Some constant mu with num[i] = mu * den[i] for every vertex.
std::optional<Ratio> common_ratio(const std::vector<std::uint64_t>& num,
                                  const std::vector<std::uint64_t>& den) {
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (!same_ratio(num[i], den[i], num[0], den[0])) return std::nullopt;
  }
  return Ratio::make(num[0], den[0]);
}

}  // namespace

Ratio Ratio::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  const auto g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

GraphClassification classify(const Graph& g) {
  GraphClassification out;
  out.bipartition = is_bipartite(g);
  out.connected = is_connected(g);

  if (g.size() == 0) {
    out.regular = 0;
    out.semiregular = std::pair<std::uint64_t, std::uint64_t>{0, 0};
    out.pseudoregular = Ratio{0, 1};
    out.semipseudoregular = Ratio{0, 1};
    out.pseudosemiregular = std::pair{Ratio{0, 1}, Ratio{0, 1}};
    return out;
  }

  const auto d1 = exact_counts(g, 1);
  const auto d2 = exact_counts(g, 2);
  const auto d3 = exact_counts(g, 3);

  if (std::all_of(d1.begin(), d1.end(), [&](std::uint64_t d) { return d == d1[0]; })) {
    out.regular = d1[0];
  }
  if (std::any_of(d1.begin(), d1.end(), [](std::uint64_t d) { return d == 0; })) {
    return out;
  }

  const auto edges = g.edges();

  {
    auto pair_of = [&](const Edge& e) {
      return std::minmax(d1[e.first], d1[e.second]);
    };
    const auto ref = pair_of(edges.front());
    if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return pair_of(e) == ref; })) {
      out.semiregular = std::pair{ref.second, ref.first};
    }
  }

  out.pseudoregular = common_ratio(d2, d1);
  out.semipseudoregular = common_ratio(d3, d1);

  {
    auto pair_of = [&](const Edge& e) {
      Ratio a = Ratio::make(d2[e.first], d1[e.first]);
      Ratio b = Ratio::make(d2[e.second], d1[e.second]);
      if (less_ratio(a, b)) std::swap(a, b);
      return std::pair{a, b};
    };
    const auto ref = pair_of(edges.front());
    if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return pair_of(e) == ref; })) {
      out.pseudosemiregular = ref;
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_sides(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const auto parts = is_bipartite(g);
  if (!parts) return std::nullopt;
  const std::size_t p = parts->first.size();
  const std::size_t q = parts->second.size();
  if (p * q != g.size()) return std::nullopt;
  return std::pair{std::min(p, q), std::max(p, q)};
}

}  // namespace estrada

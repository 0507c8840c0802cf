#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "mfk/matroid.hpp"

namespace mfk {

inline RationalMatrix integer_matrix(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

/// Edges ij, i < j, of the complete graph in lexicographic order.
inline std::vector<std::pair<int, int>> complete_graph_edges(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= vertices; ++i)
    for (int j = i + 1; j <= vertices; ++j) edges.emplace_back(i, j);
  return edges;
}

/// U_{d,n} realized by the Vandermonde rows (k^0), (k^1), ..., (k^{d-1}), k = 1..n.
inline Matroid realized_uniform(int d, int n) {
  Matroid base = uniform(d, n);
  RationalMatrix v(d, n);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < n; ++c) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(c + 1), static_cast<unsigned long>(r));
      v(r, c) = Rational(p);
    }
  return base.with_realization({v});
}

namespace detail {

inline bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

/// Named examples: u23, u24, delA3, braidK4, braidK5, boolean_<n>, uniform_<d>_<n>.
inline Matroid corpus(std::string_view name) {
  if (name == "u23") return from_matrix(integer_matrix({{1, 0, 1}, {0, 1, -1}}));
  if (name == "u24") return from_matrix(integer_matrix({{1, 0, 1, 1}, {0, 1, -1, 1}}));
  if (name == "delA3") return from_matrix(integer_matrix({{1, 0, 0, 1, 1}, {0, 1, 0, -1, 0}, {0, 0, 1, 0, -1}}));
  if (name == "braidK4") return from_graph(4, complete_graph_edges(4));
  if (name == "braidK5") return from_graph(5, complete_graph_edges(5));
  if (name.starts_with("boolean_")) {
    int n = 0;
    if (detail::parse_int(name.substr(8), n) && n >= 1) return realized_uniform(n, n);
  }
  if (name.starts_with("uniform_")) {
    auto rest = name.substr(8);
    auto sep = rest.find('_');
    int d = 0, n = 0;
    if (sep != std::string_view::npos && detail::parse_int(rest.substr(0, sep), d) &&
        detail::parse_int(rest.substr(sep + 1), n))
      return realized_uniform(d, n);
  }
  throw Error(ErrorCode::kUnknownName, "no corpus entry named '" + std::string(name) + "'");
}

inline std::vector<std::string> corpus_names() {
  return {"u23", "u24", "delA3", "braidK4", "braidK5", "boolean_<n>", "uniform_<d>_<n>"};
}

/// Every corpus matroid on at most max_n elements, with its name.
inline std::vector<std::pair<std::string, Matroid>> corpus_upto(int max_n) {
  std::vector<std::pair<std::string, Matroid>> out;
  for (std::string name : {"u23", "u24", "delA3", "braidK4", "braidK5"}) {
    Matroid m = corpus(name);
    if (m.size() <= max_n) out.emplace_back(name, std::move(m));
  }
  for (int n = 1; n <= max_n; ++n) out.emplace_back("boolean_" + std::to_string(n), corpus("boolean_" + std::to_string(n)));
  for (int n = 1; n <= max_n; ++n)
    for (int d = 1; d <= n; ++d) {
      std::string name = "uniform_" + std::to_string(d) + "_" + std::to_string(n);
      out.emplace_back(name, corpus(name));
    }
  return out;
}

}  // namespace mfk

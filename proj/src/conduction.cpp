#include "condgraph/conduction.hpp"

#include <tuple>
#include <utility>

namespace condgraph {

namespace {

void require_simple_connected(const Graph& g) {
  if (!g.is_simple()) throw DomainError("conduction needs a simple graph");
  if (!is_connected(g)) throw DomainError("conduction needs a connected graph");
}

int graph_nullity(const Graph& g) { return nullity(adjacency_matrix(g)); }

IntPolynomial graph_char_poly(const Graph& g) {
  if (g.order() == 0) return IntPolynomial{BigInt(1)};
  return char_poly(adjacency_matrix(g));
}

// Per-graph cache of the nullities and characteristic polynomials that
// the device rules keep asking for.
class DeviceTable {
 public:
  explicit DeviceTable(const Graph& g, std::optional<int> eta = std::nullopt)
      : g_(g), n_(g.order()), eta_(eta ? *eta : graph_nullity(g)),
        eta_minus_(static_cast<std::size_t>(n_), -1),
        phi_minus_(static_cast<std::size_t>(n_)) {}

  int eta() const { return eta_; }

  void set_eta_without(int v, int value) { eta_minus_[v] = value; }

  int eta_without(int v) {
    if (eta_minus_[v] < 0) eta_minus_[v] = graph_nullity(g_.without(bit(v)));
    return eta_minus_[v];
  }

  int eta_without(int u, int v) const { return graph_nullity(g_.without(bit(u) | bit(v))); }

  NullitySignature signature(int u, int v) {
    NullitySignature sig{eta_, eta_without(u), eta_without(v), std::nullopt};
    if (u != v) sig.eta_guv = eta_without(u, v);
    return sig;
  }

  const IntPolynomial& phi() {
    if (!phi_) phi_ = graph_char_poly(g_);
    return *phi_;
  }

  const IntPolynomial& phi_without(int v) {
    if (!phi_minus_[v]) phi_minus_[v] = graph_char_poly(g_.without(bit(v)));
    return *phi_minus_[v];
  }

  bool jtest(int l, int r) {
    const IntPolynomial v = graph_char_poly(g_.without(bit(l) | bit(r)));
    return equal_nullity_jtest(phi(), phi_without(l), phi_without(r), v, eta_);
  }

  DeviceVerdict verdict_from(NullitySignature sig, int u, int v) {
    DeviceVerdict out{false, match_rule(sig), std::move(sig)};
    if (out.rule == SelectionRule::kSameSameSame) {
      out.rule = SelectionRule::kEqualNullityJTest;
      out.conducts = jtest(u, v);
    } else {
      out.conducts = *rule_answer(out.rule);
    }
    return out;
  }

  DeviceVerdict verdict(int u, int v) { return verdict_from(signature(u, v), u, v); }

 private:
  const Graph& g_;
  int n_;
  int eta_;
  std::vector<int> eta_minus_;
  std::optional<IntPolynomial> phi_;
  std::vector<std::optional<IntPolynomial>> phi_minus_;
};

ConductionGraph assemble(int n, std::vector<DeviceVerdict> verdicts, ConductionMethod method) {
  ConductionGraph out;
  out.graph = Graph(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      if (!verdicts[device_index(n, u, v)].conducts) continue;
      if (u == v) {
        out.graph.add_loop(u);
      } else {
        out.graph.add_edge(u, v);
      }
    }
  }
  out.verdicts = std::move(verdicts);
  out.method = method;
  return out;
}

ConductionGraph by_selection_rules(const Graph& g, ConductionMethod method) {
  const int n = g.order();
  DeviceTable table(g);
  std::vector<DeviceVerdict> verdicts(static_cast<std::size_t>(n * (n + 1) / 2));
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) verdicts[device_index(n, u, v)] = table.verdict(u, v);
  }
  return assemble(n, std::move(verdicts), method);
}

void check_against_rule(const DeviceVerdict& d) {
  if (auto answer = rule_answer(d.rule); answer && *answer != d.conducts) {
    throw ConsistencyError("inverse entry contradicts selection rule " + to_string(d.rule));
  }
}

// For nonsingular A, eta(G-S) equals the nullity of the S-block of A^-1, so
// the signatures come from 1x1 and 2x2 blocks of the scaled inverse.
template <ExactInteger Int>
ConductionGraph by_inverse(const ScaledInverse<Int>& inv) {
  using W = typename detail::Wide<Int>::type;
  const Matrix<Int>& m = inv.numerator;
  const int n = static_cast<int>(m.rows());
  std::vector<DeviceVerdict> verdicts(static_cast<std::size_t>(n * (n + 1) / 2));
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      DeviceVerdict& d = verdicts[device_index(n, u, v)];
      d.signature.eta_gu = m(u, u) == 0 ? 1 : 0;
      d.signature.eta_gv = m(v, v) == 0 ? 1 : 0;
      if (u == v) {
        d.conducts = m(u, u) != 0;
      } else {
        const W det2 = W(m(u, u)) * W(m(v, v)) - W(m(u, v)) * W(m(u, v));
        int rank2 = 0;
        if (det2 != 0) {
          rank2 = 2;
        } else if (m(u, u) != 0 || m(v, v) != 0 || m(u, v) != 0) {
          rank2 = 1;
        }
        d.signature.eta_guv = 2 - rank2;
        d.conducts = m(u, v) != 0;
      }
      d.rule = match_rule(d.signature);
      if (d.rule == SelectionRule::kSameSameSame) d.rule = SelectionRule::kEqualNullityJTest;
      check_against_rule(d);
    }
  }
  return assemble(n, std::move(verdicts), ConductionMethod::kAutomatic);
}

std::optional<ConductionGraph> try_by_inverse(const AdjacencyMatrix<int>& a) {
  if (fits_machine_word(a, true)) {
    if (auto s = fraction_free_inverse<std::int64_t>(a.cast<std::int64_t>())) return by_inverse(*s);
    return std::nullopt;
  }
  if (auto s = fraction_free_inverse<BigInt>(a.cast<BigInt>())) return by_inverse(*s);
  return std::nullopt;
}

}  // namespace

std::string to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kUpUpUp2: return "(+1,+1,+2)";
    case SelectionRule::kUpUpSame: return "(+1,+1,0)";
    case SelectionRule::kUpSameUp: return "(+1,0,+1)";
    case SelectionRule::kUpSameSame: return "(+1,0,0)";
    case SelectionRule::kUpDownSame: return "(+1,-1,0)";
    case SelectionRule::kSameSameUp: return "(0,0,+1)";
    case SelectionRule::kSameSameSame: return "(0,0,0)";
    case SelectionRule::kSameDownDown: return "(0,-1,-1)";
    case SelectionRule::kDownDownSame: return "(-1,-1,0)";
    case SelectionRule::kDownDownDown: return "(-1,-1,-1)";
    case SelectionRule::kDownDownDown2: return "(-1,-1,-2)";
    case SelectionRule::kIpsoUp: return "ipso(+1)";
    case SelectionRule::kIpsoSame: return "ipso(0)";
    case SelectionRule::kIpsoDown: return "ipso(-1)";
    case SelectionRule::kEqualNullityJTest: return "j-test";
  }
  return "?";
}

SelectionRule match_rule(const NullitySignature& sig) {
  auto fail = [&]() -> SelectionRule {
    std::string text = "nullity signature (" + std::to_string(sig.eta_g) + "," +
                       std::to_string(sig.eta_gu) + "," + std::to_string(sig.eta_gv);
    if (sig.eta_guv) text += "," + std::to_string(*sig.eta_guv);
    throw ConsistencyError(text + ") matches no selection rule");
  };
  if (sig.ipso()) {
    switch (sig.eta_gu - sig.eta_g) {
      case 1: return SelectionRule::kIpsoUp;
      case 0: return SelectionRule::kIpsoSame;
      case -1: return SelectionRule::kIpsoDown;
      default: return fail();
    }
  }
  int a = sig.eta_gu - sig.eta_g;
  int b = sig.eta_gv - sig.eta_g;
  const int c = *sig.eta_guv - sig.eta_g;
  if (a < b) std::swap(a, b);
  const auto key = std::tuple(a, b, c);
  using T = std::tuple<int, int, int>;
  if (key == T{1, 1, 2}) return SelectionRule::kUpUpUp2;
  if (key == T{1, 1, 0}) return SelectionRule::kUpUpSame;
  if (key == T{1, 0, 1}) return SelectionRule::kUpSameUp;
  if (key == T{1, 0, 0}) return SelectionRule::kUpSameSame;
  if (key == T{1, -1, 0}) return SelectionRule::kUpDownSame;
  if (key == T{0, 0, 1}) return SelectionRule::kSameSameUp;
  if (key == T{0, 0, 0}) return SelectionRule::kSameSameSame;
  if (key == T{0, -1, -1}) return SelectionRule::kSameDownDown;
  if (key == T{-1, -1, 0}) return SelectionRule::kDownDownSame;
  if (key == T{-1, -1, -1}) return SelectionRule::kDownDownDown;
  if (key == T{-1, -1, -2}) return SelectionRule::kDownDownDown2;
  return fail();
}

std::optional<bool> rule_answer(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kUpUpSame:
    case SelectionRule::kUpSameSame:
    case SelectionRule::kSameSameUp:
    case SelectionRule::kDownDownSame:
    case SelectionRule::kDownDownDown:
    case SelectionRule::kIpsoSame:
    case SelectionRule::kIpsoDown:
      return true;
    case SelectionRule::kUpUpUp2:
    case SelectionRule::kUpSameUp:
    case SelectionRule::kUpDownSame:
    case SelectionRule::kSameDownDown:
    case SelectionRule::kDownDownDown2:
    case SelectionRule::kIpsoUp:
      return false;
    case SelectionRule::kSameSameSame:
    case SelectionRule::kEqualNullityJTest:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<SupportMatrix> inverse_support(const AdjacencyMatrix<int>& a) {
  auto support = [](const auto& scaled) {
    return SupportMatrix((scaled.numerator.array() != 0).matrix());
  };
  if (fits_machine_word(a, true)) {
    if (auto s = fraction_free_inverse<std::int64_t>(a.cast<std::int64_t>())) return support(*s);
    return std::nullopt;
  }
  if (auto s = fraction_free_inverse<BigInt>(a.cast<BigInt>())) return support(*s);
  return std::nullopt;
}

NullitySignature nullity_signature(const Graph& g, int u, int v) {
  DeviceTable table(g);
  return table.signature(u, v);
}

IntPolynomial jacobi_numerator(const IntPolynomial& s, const IntPolynomial& t,
                               const IntPolynomial& u, const IntPolynomial& v) {
  return u * t - s * v;
}

bool equal_nullity_jtest(const IntPolynomial& s, const IntPolynomial& t, const IntPolynomial& u,
                         const IntPolynomial& v, int eta) {
  const IntPolynomial p = jacobi_numerator(s, t, u, v);
  if (p.is_zero()) return false;
  return zero_root_multiplicity(p) == 2 * eta;
}

bool equal_nullity_jtest(const Graph& g, int l, int r) {
  require_simple_connected(g);
  DeviceTable table(g);
  return table.jtest(l, r);
}

DeviceVerdict device_verdict(const Graph& g, int u, int v) {
  require_simple_connected(g);
  DeviceTable table(g);
  return table.verdict(u, v);
}

int device_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u - 1) / 2 + (v - u);
}

const DeviceVerdict& ConductionGraph::verdict(int u, int v) const {
  return verdicts[static_cast<std::size_t>(device_index(graph.order(), u, v))];
}

ConductionGraph conduction_graph(const Graph& g, ConductionMethod method) {
  require_simple_connected(g);
  if (method == ConductionMethod::kSelectionRules) return by_selection_rules(g, method);
  const AdjacencyMatrix<int> a = adjacency_matrix(g);
  if (auto fast = try_by_inverse(a)) return std::move(*fast);
  if (nullity(a) == 1) return conduction_graph_nullity1_blocks(g).conduction;
  return by_selection_rules(g, method);
}

Nullity1Blocks conduction_graph_nullity1_blocks(const Graph& g) {
  require_simple_connected(g);
  const int n = g.order();
  const AdjacencyMatrix<int> a = adjacency_matrix(g);
  KernelBasis basis = kernel_basis(a);
  if (basis.dimension() != 1) throw DomainError("block form needs nullity 1");

  Nullity1Blocks out;
  out.kernel_vector = std::move(basis.vectors.front());
  out.kind.resize(static_cast<std::size_t>(n));
  DeviceTable table(g, 1);
  for (int v = 0; v < n; ++v) {
    if (out.kernel_vector(v) != 0) {
      out.kind[v] = VertexKind::kCore;
      out.core |= bit(v);
      table.set_eta_without(v, 0);
    } else if (table.eta_without(v) == 1) {
      out.kind[v] = VertexKind::kMiddle;
      out.middle |= bit(v);
    } else {
      out.kind[v] = VertexKind::kUpper;
      out.upper |= bit(v);
    }
  }

  std::vector<DeviceVerdict> verdicts(static_cast<std::size_t>(n * (n + 1) / 2));
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      const bool core_u = out.kind[u] == VertexKind::kCore;
      const bool core_v = out.kind[v] == VertexKind::kCore;
      NullitySignature sig{1, table.eta_without(u), table.eta_without(v), std::nullopt};
      DeviceVerdict& d = verdicts[device_index(n, u, v)];
      if (u == v || core_u == core_v) {
        if (u != v) sig.eta_guv = table.eta_without(u, v);
        d = core_u ? DeviceVerdict{true, match_rule(sig), sig} : table.verdict_from(sig, u, v);
      } else {
        // Core against middle has offsets (-1, 0, -1); core against upper
        // has (-1, +1, 0). Neither conducts.
        const int other = core_u ? sig.eta_gv : sig.eta_gu;
        sig.eta_guv = other - 1;
        d = DeviceVerdict{false, match_rule(sig), sig};
      }
      check_against_rule(d);
    }
  }
  out.conduction = assemble(n, std::move(verdicts), ConductionMethod::kAutomatic);
  return out;
}

}  // namespace condgraph

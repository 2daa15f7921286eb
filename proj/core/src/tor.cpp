#include "thhcalc/tor.hpp"

#include "thhcalc/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace thhcalc {

ModuleSpec ground_module() { return ModuleSpec{{ModuleSummand{"1", 0, {}, std::nullopt}}}; }

ModuleSpec trivial_module(const AlgebraSpec& space) { return ModuleSpec{{ModuleSummand{"1", 0, {}, space}}}; }

ModuleSpec free_module(std::vector<std::string> names, std::optional<AlgebraSpec> space) {
  return ModuleSpec{{ModuleSummand{"1", 0, std::move(names), std::move(space)}}};
}

namespace {

void require_koszul_shape(const AlgebraSpec& algebra) {
  for (const auto& g : algebra.generators()) {
    const bool ok = g.filtration == 0 && (g.kind == GeneratorKind::Polynomial || g.kind == GeneratorKind::Exterior);
    if (!ok)
      throw Error(ErrorCode::UnsupportedKind,
                  "resolutions need polynomial or exterior generators in filtration 0; '" + g.name + "' is " +
                      std::string(to_string(g.kind)));
  }
}

bool contains(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

void check_names(const AlgebraSpec& algebra, const ModuleSpec& module) {
  std::set<std::string> labels;
  for (const auto& s : module.summands) {
    if (s.shift < 0) throw Error(ErrorCode::UnsupportedShape, "summand '" + s.label + "' has a negative shift");
    if (!labels.insert(s.label).second) throw Error(ErrorCode::DuplicateName, "summand label '" + s.label + "'");
    if (s.space && !(s.space->field() == algebra.field()))
      throw Error(ErrorCode::MixedSpec, "module space over another prime");
    for (const auto& n : s.free_over) {
      const bool coefficient = std::any_of(algebra.coefficients().begin(), algebra.coefficients().end(),
                                           [&](const CoefficientFactor& c) { return c.name == n; });
      if (!algebra.find(n) && !coefficient) throw Error(ErrorCode::UnknownName, "module acts through unknown '" + n + "'");
    }
  }
}

std::vector<Monomial> space_basis(const std::optional<AlgebraSpec>& space, int n) {
  if (space) return space->basis(n);
  return n == 0 ? std::vector<Monomial>{Monomial{}} : std::vector<Monomial>{};
}

/// M (x)_{A_G} K_G (x) V_N for one summand of each module, where G are the
/// generators acting trivially on the right summand.
struct Complex {
  std::map<Bidegree, std::size_t> dims;
  std::map<Bidegree, FpMatrix> d;  // (s,t) -> (s-1,t)
};

Complex build_complex(const AlgebraSpec& algebra, const ModuleSummand& left, const ModuleSummand& right, int bound) {
  const auto& f = algebra.field();
  std::vector<std::string> complement;
  for (const auto& g : algebra.generators())
    if (!contains(right.free_over, g.name)) complement.push_back(g.name);
  const AlgebraSpec koszul = koszul_generators(algebra, complement);
  std::vector<std::size_t> koszul_to_algebra;
  for (const auto& name : complement) koszul_to_algebra.push_back(algebra.index_of(name));

  // Left module basis: monomials supported on the free generators times the space.
  std::vector<bool> acts_freely(algebra.size());
  for (std::size_t i = 0; i < algebra.size(); ++i) acts_freely[i] = contains(left.free_over, algebra.generator(i).name);
  std::map<int, std::vector<Monomial>> free_part;
  for (int n = 0; n <= bound; ++n)
    for (auto& m : algebra.basis(n)) {
      bool ok = true;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] && !acts_freely[i]) ok = false;
      if (ok) free_part[n].push_back(std::move(m));
    }

  using Key = std::tuple<Monomial, Monomial, Monomial, Monomial>;  // sigma, a, v_left, v_right
  std::map<Bidegree, std::vector<Key>> cells;
  for (const auto& [sb, sigmas] : koszul.bigraded_basis(bound))
    for (int na = 0; na + sb.total() + left.shift + right.shift <= bound; ++na)
      for (int nv = 0; na + nv + sb.total() + left.shift + right.shift <= bound; ++nv)
        for (int nw = 0; na + nv + nw + sb.total() + left.shift + right.shift <= bound; ++nw) {
          const auto& as = free_part[na];
          if (as.empty()) continue;
          const auto vs = space_basis(left.space, nv);
          const auto ws = space_basis(right.space, nw);
          const Bidegree b{sb.s, sb.t + na + nv + nw + left.shift + right.shift};
          for (const auto& sigma : sigmas)
            for (const auto& a : as)
              for (const auto& v : vs)
                for (const auto& w : ws) cells[b].emplace_back(sigma, a, v, w);
        }

  Complex cx;
  std::map<Bidegree, std::map<Key, std::size_t>> index;
  for (auto& [b, keys] : cells) {
    std::sort(keys.begin(), keys.end());
    cx.dims[b] = keys.size();
    auto& idx = index[b];
    for (std::size_t i = 0; i < keys.size(); ++i) idx[keys[i]] = i;
  }

  for (const auto& [b, keys] : cells) {
    if (b.s == 0) continue;
    const Bidegree tb{b.s - 1, b.t};
    auto tit = index.find(tb);
    FpMatrix d(tit == index.end() ? 0 : tit->second.size(), keys.size());
    for (std::size_t col = 0; col < keys.size(); ++col) {
      const auto& [sigma, a, v, w] = keys[col];
      const int deg_v = left.space ? left.space->total_degree(v) : 0;
      const int deg_m = left.shift + algebra.total_degree(a) + deg_v;
      int prefix = 0;  // total degree of the Koszul factors before position k
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        const int tot_k = koszul.generator(k).total_degree();
        if (sigma[k] == 0) continue;
        const std::size_t gi = koszul_to_algebra[k];
        const int deg_g = algebra.generator(gi).total_degree();
        const int here = prefix;
        prefix += sigma[k] * tot_k;
        if (!acts_freely[gi]) continue;
        Monomial g = algebra.unit();
        g[gi] = 1;
        const auto prod = multiply_monomials(algebra, a, g);
        if (!prod) continue;
        int parity = deg_m + (1 + deg_g) * here + deg_v * deg_g;
        Coeff c = prod->second;
        if (parity % 2 != 0) c = f.neg(c);
        Monomial lowered = sigma;
        lowered[k] -= 1;
        if (tit == index.end()) throw Error(ErrorCode::DimensionMismatch, "resolution window too small");
        const std::size_t row = tit->second.at(Key{lowered, prod->first, v, w});
        d.at(row, col) = f.add(d.at(row, col), c);
      }
    }
    cx.d.emplace(b, std::move(d));
  }
  return cx;
}

FpMatrix out_of(const Complex& cx, Bidegree b) {
  auto it = cx.d.find(b);
  if (it != cx.d.end()) return it->second;
  auto dit = cx.dims.find(b);
  const std::size_t cols = dit == cx.dims.end() ? 0 : dit->second;
  std::size_t rows = 0;
  if (b.s > 0)
    if (auto r = cx.dims.find({b.s - 1, b.t}); r != cx.dims.end()) rows = r->second;
  return FpMatrix(rows, cols);
}

BigradedDims homology(const Complex& cx, const PrimeField& f, int cap) {
  BigradedDims out;
  for (const auto& [b, n] : cx.dims) {
    if (b.total() > cap) continue;
    const FpMatrix d_out = out_of(cx, b);
    const FpMatrix d_in = out_of(cx, {b.s + 1, b.t});
    FpMatrix in = d_in.rows() == n ? d_in : FpMatrix(n, d_in.cols());
    const auto h = static_cast<std::int64_t>(homology_dim(in, d_out, f));
    if (h != 0) out[b] += h;
  }
  return out;
}

}  // namespace

AlgebraSpec koszul_generators(const AlgebraSpec& algebra, const std::vector<std::string>& names) {
  std::vector<GeneratorSpec> gens;
  for (const auto& g : algebra.generators()) {
    if (!contains(names, g.name)) continue;
    if (g.kind == GeneratorKind::Polynomial)
      gens.push_back(exterior("[" + g.name + "]", g.degree, 1));
    else if (g.kind == GeneratorKind::Exterior)
      gens.push_back(divided("[" + g.name + "]", g.degree, 1));
    else
      throw Error(ErrorCode::UnsupportedKind, "no Koszul generator for '" + g.name + "'");
  }
  return make_algebra(algebra.field(), std::move(gens));
}

ChainComplexOfFrees resolution(const AlgebraSpec& algebra, int cap) {
  require_koszul_shape(algebra);
  std::vector<std::string> all;
  for (const auto& g : algebra.generators()) all.push_back(g.name);
  const ModuleSummand free_left{"A", 0, all, std::nullopt};
  const ModuleSummand ground{"1", 0, {}, std::nullopt};
  Complex cx = build_complex(algebra, free_left, ground, cap + 1);
  ChainComplexOfFrees out{algebra, koszul_generators(algebra, all), cap, {}, {}, {}};
  for (const auto& [b, sigmas] : out.generators.bigraded_basis(cap + 1)) out.basis[b] = sigmas;
  out.dims = std::move(cx.dims);
  out.differential = std::move(cx.d);
  // d o d = 0 everywhere.
  for (const auto& [b, d] : out.differential) {
    auto next = out.differential.find({b.s - 1, b.t});
    if (next == out.differential.end() || next->second.cols() != d.rows()) continue;
    if (!multiply(next->second, d, algebra.field()).is_zero())
      throw Error(ErrorCode::CompositionNonzero, "resolution differential does not square to zero");
  }
  return out;
}

BigradedDims resolution_homology(const ChainComplexOfFrees& cx) {
  Complex c{cx.dims, cx.differential};
  return homology(c, cx.algebra.field(), cx.cap);
}

BigradedDims tor_oracle(const AlgebraSpec& algebra, const ModuleSpec& left, const ModuleSpec& right, int cap,
                        bool resolve_left) {
  if (resolve_left) return tor_oracle(algebra, right, left, cap, false);
  require_koszul_shape(algebra);
  check_names(algebra, left);
  check_names(algebra, right);
  BigradedDims out;
  for (const auto& l : left.summands)
    for (const auto& r : right.summands)
      for (const auto& [b, d] : homology(build_complex(algebra, l, r, cap + 1), algebra.field(), cap)) out[b] += d;
  return out;
}

Page tor_closed_form(const AlgebraSpec& algebra, const ModuleSpec& left, const ModuleSpec& right, int cap) {
  require_koszul_shape(algebra);
  check_names(algebra, left);
  check_names(algebra, right);
  if (left.summands.size() != 1 || right.summands.size() != 1)
    throw Error(ErrorCode::UnsupportedShape, "closed form needs single-summand modules");
  const auto& l = left.summands.front();
  const auto& r = right.summands.front();
  if (l.shift != 0 || r.shift != 0) throw Error(ErrorCode::UnsupportedShape, "closed form needs unshifted modules");

  for (const auto& c : algebra.coefficients()) {
    const bool fl = contains(l.free_over, c.name);
    const bool fr = contains(r.free_over, c.name);
    if (c.mode == CoefficientMode::Symbolic && fl == fr)
      throw Error(ErrorCode::UnsupportedShape, "symbolic coefficient '" + c.name + "' must act freely on exactly one side");
  }

  std::vector<GeneratorSpec> gens;
  if (l.space) gens.insert(gens.end(), l.space->generators().begin(), l.space->generators().end());
  if (r.space) gens.insert(gens.end(), r.space->generators().begin(), r.space->generators().end());
  std::vector<std::string> neither;
  for (const auto& g : algebra.generators()) {
    const bool fl = contains(l.free_over, g.name);
    const bool fr = contains(r.free_over, g.name);
    if (fl && fr) gens.push_back(g);
    if (!fl && !fr) neither.push_back(g.name);
  }
  const AlgebraSpec koszul = koszul_generators(algebra, neither);
  gens.insert(gens.end(), koszul.generators().begin(), koszul.generators().end());
  return spec_page(make_algebra(algebra.field(), std::move(gens)), 2, cap);
}

Page tor_exterior_module(const GeneratorSpec& y, const ModuleSpec& module, const AlgebraSpec& coeff, int cap) {
  if (y.kind != GeneratorKind::Exterior || y.filtration != 0)
    throw Error(ErrorCode::UnsupportedKind, "'" + y.name + "' must be an exterior generator in filtration 0");
  const AlgebraSpec ground = make_algebra(coeff.field(), {});
  const AlgebraSpec tower = make_algebra(coeff.field(), {divided("[" + y.name + "]", y.degree, 1)});
  std::vector<PageSummand> summands;
  for (const auto& s : module.summands) {
    if (s.space) throw Error(ErrorCode::UnsupportedShape, "summand '" + s.label + "' must be a single class");
    if (s.shift < 0) throw Error(ErrorCode::UnsupportedShape, "summand '" + s.label + "' has a negative shift");
    const bool free = s.free_over.size() == 1 && s.free_over.front() == y.name;
    if (!free && !s.free_over.empty())
      throw Error(ErrorCode::UnsupportedShape, "summand '" + s.label + "' is neither free nor trivial over E(" + y.name + ")");
    summands.push_back({s.label, 0, s.shift, free ? ground : tower});
  }
  return Page(coeff, std::move(summands), 2, cap);
}

BigradedDims window(const BigradedDims& dims, int cap) {
  BigradedDims out;
  for (const auto& [b, d] : dims)
    if (b.total() <= cap && d != 0) out[b] = d;
  return out;
}

}  // namespace thhcalc

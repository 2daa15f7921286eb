#include "thhcalc/graded_algebra.hpp"

#include "thhcalc/errors.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace thhcalc {

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::Exterior: return "exterior";
    case GeneratorKind::Polynomial: return "polynomial";
    case GeneratorKind::Truncated: return "truncated";
    case GeneratorKind::Divided: return "divided";
  }
  return "unknown";
}

GeneratorKind generator_kind_from_string(std::string_view name) {
  if (name == "exterior") return GeneratorKind::Exterior;
  if (name == "polynomial") return GeneratorKind::Polynomial;
  if (name == "truncated") return GeneratorKind::Truncated;
  if (name == "divided") return GeneratorKind::Divided;
  throw Error(ErrorCode::ParseError, "unknown generator kind '" + std::string(name) + "'");
}

GeneratorSpec exterior(std::string name, int degree, int filtration) {
  return {std::move(name), degree, filtration, GeneratorKind::Exterior, 0};
}
GeneratorSpec polynomial(std::string name, int degree, int filtration) {
  return {std::move(name), degree, filtration, GeneratorKind::Polynomial, 0};
}
GeneratorSpec truncated(std::string name, int degree, int height, int filtration) {
  return {std::move(name), degree, filtration, GeneratorKind::Truncated, height};
}
GeneratorSpec divided(std::string name, int degree, int filtration) {
  return {std::move(name), degree, filtration, GeneratorKind::Divided, 0};
}

namespace {

std::uint64_t fingerprint(const PrimeField& f, const std::vector<GeneratorSpec>& gens,
                          const std::vector<CoefficientFactor>& coeffs) {
  std::ostringstream os;
  os << f.p() << '|';
  for (const auto& g : gens)
    os << g.name << ',' << g.degree << ',' << g.filtration << ',' << static_cast<int>(g.kind) << ','
       << g.height << ';';
  os << '|';
  for (const auto& c : coeffs) os << c.name << ',' << static_cast<int>(c.mode) << ';';
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : os.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

AlgebraSpec::AlgebraSpec(PrimeField field, std::vector<GeneratorSpec> generators,
                         std::vector<CoefficientFactor> coefficients)
    : field_(field), generators_(std::move(generators)), coefficients_(std::move(coefficients)) {
  id_ = fingerprint(field_, generators_, coefficients_);
}

std::optional<std::size_t> AlgebraSpec::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

std::size_t AlgebraSpec::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownName, "no generator named '" + std::string(name) + "'");
}

std::optional<int> AlgebraSpec::max_exponent(std::size_t i) const {
  const auto& g = generators_.at(i);
  switch (g.kind) {
    case GeneratorKind::Exterior: return 1;
    case GeneratorKind::Truncated: return g.height - 1;
    default: return std::nullopt;
  }
}

int AlgebraSpec::total_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators_[i].total_degree();
  return d;
}

Bidegree AlgebraSpec::bidegree(const Monomial& m) const {
  Bidegree b;
  for (std::size_t i = 0; i < m.size(); ++i) {
    b.s += m[i] * generators_[i].filtration;
    b.t += m[i] * generators_[i].degree;
  }
  return b;
}

namespace {

void enumerate(const AlgebraSpec& spec, std::size_t index, int remaining, bool exact, Monomial& current,
               const std::function<void(const Monomial&)>& emit) {
  if (index == spec.size()) {
    if (!exact || remaining == 0) emit(current);
    return;
  }
  const int step = spec.generator(index).total_degree();
  const auto bound = spec.max_exponent(index);
  for (int e = 0; (!bound || e <= *bound) && e * step <= remaining; ++e) {
    current[index] = e;
    enumerate(spec, index + 1, remaining - e * step, exact, current, emit);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Monomial> AlgebraSpec::basis(int total_degree) const {
  std::vector<Monomial> out;
  if (total_degree < 0) return out;
  Monomial current = unit();
  enumerate(*this, 0, total_degree, true, current, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::map<Bidegree, std::vector<Monomial>> AlgebraSpec::bigraded_basis(int cap) const {
  std::map<Bidegree, std::vector<Monomial>> out;
  if (cap < 0) return out;
  Monomial current = unit();
  enumerate(*this, 0, cap, false, current, [&](const Monomial& m) { out[bidegree(m)].push_back(m); });
  return out;
}

AlgebraSpec make_algebra(const PrimeField& field, std::vector<GeneratorSpec> generators,
                         std::vector<CoefficientFactor> coefficients) {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.name.empty()) throw Error(ErrorCode::InvalidGenerator, "generator without a name");
    if (!names.insert(g.name).second)
      throw Error(ErrorCode::DuplicateName, "generator '" + g.name + "' declared twice");
    if (g.degree < 0 || g.filtration < 0)
      throw Error(ErrorCode::InvalidGenerator, "negative degree on '" + g.name + "'");
    if (g.total_degree() == 0)
      throw Error(ErrorCode::InvalidGenerator, "generator '" + g.name + "' has total degree 0");
    switch (g.kind) {
      case GeneratorKind::Exterior:
        if (!g.odd())
          throw Error(ErrorCode::ParityViolation,
                      "exterior generator '" + g.name + "' must have odd total degree");
        break;
      case GeneratorKind::Truncated:
        if (g.height < 2)
          throw Error(ErrorCode::InvalidGenerator, "truncation height of '" + g.name + "' must be >= 2");
        [[fallthrough]];
      case GeneratorKind::Polynomial:
      case GeneratorKind::Divided:
        if (g.odd())
          throw Error(ErrorCode::ParityViolation, std::string(to_string(g.kind)) + " generator '" +
                                                      g.name + "' must have even total degree");
        break;
    }
  }
  for (const auto& c : coefficients)
    if (!names.insert(c.name).second)
      throw Error(ErrorCode::DuplicateName, "coefficient factor '" + c.name + "' clashes");
  return AlgebraSpec(field, std::move(generators), std::move(coefficients));
}

AlgebraSpec tensor(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::MixedSpec, "tensor of algebras over different primes");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  auto coeffs = a.coefficients();
  coeffs.insert(coeffs.end(), b.coefficients().begin(), b.coefficients().end());
  return make_algebra(a.field(), std::move(gens), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Elements

Element zero(const AlgebraSpec& spec) { return Element{spec.id(), {}}; }

Element one(const AlgebraSpec& spec) { return monomial(spec, spec.unit(), 1); }

Element monomial(const AlgebraSpec& spec, Monomial m, Coeff c) {
  if (m.size() != spec.size()) throw Error(ErrorCode::MixedSpec, "monomial length does not match spec");
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto bound = spec.max_exponent(i);
    if (m[i] < 0) throw Error(ErrorCode::InvalidGenerator, "negative exponent");
    if (bound && m[i] > *bound) return zero(spec);
  }
  Element e = zero(spec);
  c %= spec.field().p();
  if (c != 0) e.terms.emplace(std::move(m), c);
  return e;
}

Element gen(const AlgebraSpec& spec, std::string_view name, int power) {
  Monomial m = spec.unit();
  m[spec.index_of(name)] = power;
  return monomial(spec, std::move(m));
}

Element product_of(const AlgebraSpec& spec, const std::vector<std::pair<std::string, int>>& factors) {
  Element acc = one(spec);
  for (const auto& [name, e] : factors) acc = multiply(spec, acc, gen(spec, name, e));
  return acc;
}

namespace {

void check_spec(const AlgebraSpec& spec, const Element& e) {
  if (e.spec_id != spec.id()) throw Error(ErrorCode::MixedSpec, "element belongs to a different spec");
}

void accumulate(const PrimeField& f, std::map<Monomial, Coeff>& terms, const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

Element add(const AlgebraSpec& spec, const Element& a, const Element& b) {
  check_spec(spec, a);
  check_spec(spec, b);
  Element out = a;
  for (const auto& [m, c] : b.terms) accumulate(spec.field(), out.terms, m, c);
  return out;
}

Element scale(const AlgebraSpec& spec, const Element& a, Coeff c) {
  check_spec(spec, a);
  Element out = zero(spec);
  c %= spec.field().p();
  if (c == 0) return out;
  for (const auto& [m, x] : a.terms) out.terms.emplace(m, spec.field().mul(x, c));
  return out;
}

Element subtract(const AlgebraSpec& spec, const Element& a, const Element& b) {
  return add(spec, a, scale(spec, b, spec.field().neg(1)));
}

std::optional<std::pair<Monomial, Coeff>> multiply_monomials(const AlgebraSpec& spec, const Monomial& a,
                                                             const Monomial& b) {
  const auto& f = spec.field();
  const auto& gens = spec.generators();
  // Moving each factor of b leftwards past the higher-index factors of a.
  int parity = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (b[j] == 0 || (b[j] * gens[j].total_degree()) % 2 == 0) continue;
    for (std::size_t i = j + 1; i < gens.size(); ++i)
      if (a[i] != 0 && (a[i] * gens[i].total_degree()) % 2 != 0) parity ^= 1;
  }
  Coeff coeff = parity ? f.neg(1) : 1;
  Monomial out(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int sum = a[i] + b[i];
    switch (gens[i].kind) {
      case GeneratorKind::Exterior:
        if (sum > 1) return std::nullopt;
        break;
      case GeneratorKind::Truncated:
        if (sum >= gens[i].height) return std::nullopt;
        break;
      case GeneratorKind::Polynomial:
        break;
      case GeneratorKind::Divided:
        coeff = f.mul(coeff, f.binomial(sum, a[i]));
        if (coeff == 0) return std::nullopt;
        break;
    }
    out[i] = sum;
  }
  return std::make_pair(std::move(out), coeff);
}

Element multiply(const AlgebraSpec& spec, const Element& a, const Element& b) {
  check_spec(spec, a);
  check_spec(spec, b);
  const auto& f = spec.field();
  Element out = zero(spec);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      if (auto prod = multiply_monomials(spec, ma, mb))
        accumulate(f, out.terms, prod->first, f.mul(prod->second, f.mul(ca, cb)));
  return out;
}

Element power(const AlgebraSpec& spec, const Element& a, int exponent) {
  Element acc = one(spec);
  for (int i = 0; i < exponent; ++i) acc = multiply(spec, acc, a);
  return acc;
}

std::optional<int> homogeneous_degree(const AlgebraSpec& spec, const Element& e) {
  std::optional<int> deg;
  for (const auto& [m, c] : e.terms) {
    const int d = spec.total_degree(m);
    if (deg && *deg != d) throw Error(ErrorCode::DegreeMismatch, "element is not homogeneous");
    deg = d;
  }
  return deg;
}

Element rebase(const AlgebraSpec& from, const AlgebraSpec& to, const Element& e) {
  check_spec(from, e);
  Element out = zero(to);
  for (const auto& [m, c] : e.terms) {
    Element term = monomial(to, to.unit(), c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const auto& g = from.generator(i);
      const std::size_t j = to.index_of(g.name);
      const auto& h = to.generator(j);
      Element factor;
      if (g.kind == GeneratorKind::Divided) {
        if (h.kind != GeneratorKind::Divided)
          throw Error(ErrorCode::UnsupportedKind, "cannot map divided powers of '" + g.name + "'");
        factor = gen(to, h.name, m[i]);
      } else {
        factor = power(to, gen(to, h.name, 1), m[i]);
      }
      term = multiply(to, term, factor);
    }
    out = add(to, out, term);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimensions

GradedDims convolve(const GradedDims& a, const GradedDims& b) {
  const int cap = std::min(a.cap, b.cap);
  GradedDims out(cap);
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j) out.at(i + j) += a[i] * b[j];
  return out;
}

GradedDims shifted(const GradedDims& a, int shift) {
  GradedDims out(a.cap);
  for (int n = 0; n <= a.cap; ++n) out.at(n) = a[n - shift];
  return out;
}

GradedDims operator+(const GradedDims& a, const GradedDims& b) {
  GradedDims out(std::min(a.cap, b.cap));
  for (int n = 0; n <= out.cap; ++n) out.at(n) = a[n] + b[n];
  return out;
}

GradedDims operator-(const GradedDims& a, const GradedDims& b) {
  GradedDims out(std::min(a.cap, b.cap));
  for (int n = 0; n <= out.cap; ++n) out.at(n) = a[n] - b[n];
  return out;
}

GradedDims hilbert(const AlgebraSpec& spec, int cap) {
  GradedDims dims(std::max(cap, 0));
  if (cap < 0) return dims;
  dims.at(0) = 1;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const int step = spec.generator(i).total_degree();
    const auto bound = spec.max_exponent(i);
    GradedDims next(cap);
    for (int n = 0; n <= cap; ++n)
      for (int e = 0; (!bound || e <= *bound) && e * step <= n; ++e) next.at(n) += dims[n - e * step];
    dims = std::move(next);
  }
  return dims;
}

BigradedDims hilbert_bigraded(const AlgebraSpec& spec, int cap) {
  BigradedDims out;
  for (const auto& [b, ms] : spec.bigraded_basis(cap)) out[b] = static_cast<std::int64_t>(ms.size());
  return out;
}

GradedDims total_dims(const BigradedDims& dims, int cap) {
  GradedDims out(cap);
  for (const auto& [b, d] : dims)
    if (b.total() >= 0 && b.total() <= cap) out.at(b.total()) += d;
  return out;
}

std::string format_monomial(const AlgebraSpec& spec, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    const auto& g = spec.generator(i);
    if (g.kind == GeneratorKind::Divided) {
      out += "g" + std::to_string(m[i]) + "(" + g.name + ")";
    } else {
      out += g.name;
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string format_element(const AlgebraSpec& spec, const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += format_monomial(spec, m);
  }
  return out;
}

AlgebraSpec cyclic_bar_homology(const PrimeField& f, const std::string& x, int degree,
                                CoefficientMode coefficient) {
  return make_algebra(f, {polynomial(x, degree), exterior("d" + x, degree + 1)},
                      {{"C[" + x + "]", coefficient, 2 * static_cast<int>(f.p()) - 4}});
}

AlgebraSpec replete_bar_homology(const PrimeField& f, const std::string& x, int degree,
                                 CoefficientMode coefficient) {
  return make_algebra(f, {polynomial(x, degree), exterior("dlog" + x, 1)},
                      {{"C[" + x + "]", coefficient, 2 * static_cast<int>(f.p()) - 4}});
}

AlgebraSpec group_completion_homology(const PrimeField& f, const std::string& x,
                                      CoefficientMode coefficient) {
  return make_algebra(f, {exterior("dlog" + x, 1)},
                      {{"C[" + x + "]", coefficient, 2 * static_cast<int>(f.p()) - 4}});
}

}  // namespace thhcalc

#include "nilcert/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace nilcert {

namespace {

MultiPoly var(Indeterminate v) { return MultiPoly::variable(v); }

// The identity's right-hand side recomputed from scratch.  Deliberately does
// not reuse WitnessBuilder so that checking stays independent of building.
MultiPoly relation_combination(unsigned n, unsigned m, const std::vector<MultiPoly>& rel,
                               const MultiPoly& unit) {
  MultiPoly rhs = unit * (var(coeff_a(0)) * var(coeff_b(0)) - MultiPoly(1));
  for (unsigned k = 1; k <= n + m; ++k) {
    if (rel[k - 1].is_zero()) continue;
    MultiPoly ck;
    for (unsigned i = 0; i <= std::min(k, n); ++i) {
      if (k - i > m) continue;
      ck += var(coeff_a(i)) * var(coeff_b(k - i));
    }
    rhs += rel[k - 1] * ck;
  }
  return rhs;
}

}  // namespace

// --- MembershipWitness -------------------------------------------------------

MembershipWitness MembershipWitness::zero(const IdealLabel& label) {
  MembershipWitness w;
  w.label = label;
  w.rel_coeffs.assign(label.n() + label.m(), MultiPoly());
  return w;
}

MultiPoly MembershipWitness::gen(Indeterminate d) const {
  auto it = gen_coeffs.find(d);
  return it == gen_coeffs.end() ? MultiPoly() : it->second;
}

MultiPoly MembershipWitness::expand() const {
  const unsigned n = label.n();
  const unsigned m = label.m();
  MultiPoly rhs = relation_combination(n, m, rel_coeffs, unit_coeff);
  for (const auto& [d, coeff] : gen_coeffs) rhs += coeff * var(d);
  return rhs;
}

MembershipWitness MembershipWitness::scaled(const MultiPoly& factor) const {
  MembershipWitness out;
  out.label = label;
  out.subject = subject * factor;
  for (const auto& [d, coeff] : gen_coeffs) {
    MultiPoly p = coeff * factor;
    if (!p.is_zero()) out.gen_coeffs.emplace(d, std::move(p));
  }
  out.rel_coeffs.reserve(rel_coeffs.size());
  for (const auto& r : rel_coeffs) out.rel_coeffs.push_back(r * factor);
  out.unit_coeff = unit_coeff * factor;
  return out;
}

MembershipWitness& MembershipWitness::operator+=(const MembershipWitness& other) {
  if (other.label != label) throw std::invalid_argument("adding witnesses at different labels");
  subject += other.subject;
  for (const auto& [d, coeff] : other.gen_coeffs) {
    auto& mine = gen_coeffs[d];
    mine += coeff;
    if (mine.is_zero()) gen_coeffs.erase(d);
  }
  for (std::size_t k = 0; k < rel_coeffs.size(); ++k) rel_coeffs[k] += other.rel_coeffs[k];
  unit_coeff += other.unit_coeff;
  return *this;
}

// --- WitnessBuilder ----------------------------------------------------------

WitnessBuilder::WitnessBuilder(unsigned n, unsigned m)
    : n_(n), m_(m), c_(convolution(n, m)),
      unit_(var(coeff_a(0)) * var(coeff_b(0)) - MultiPoly(1)) {}

const MembershipWitness& WitnessBuilder::membership_witness(const IdealLabel& label,
                                                            Indeterminate e) {
  if (label.n() != n_ || label.m() != m_) throw std::invalid_argument("label shape mismatch");
  const auto key = std::make_pair(label, e);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto cl = closures_.find(label);
  if (cl == closures_.end()) cl = closures_.emplace(label, generic_closure(label)).first;
  if (!cl->second.contains(e))
    throw NotInClosure(e.name() + " is not in the closure of " + label.to_string());
  MembershipWitness w = derive(label, e, cl->second);
  return memo_.emplace(key, std::move(w)).first->second;
}

MembershipWitness WitnessBuilder::derive(const IdealLabel& label, Indeterminate e,
                                         const Closure& cl) {
  MembershipWitness w = MembershipWitness::zero(label);
  w.subject = var(e);
  if (cl.rule(e) == Closure::Rule::Generator) {
    w.gen_coeffs.emplace(e, MultiPoly(1));
    return w;
  }
  // e_0 c_k - e_0 * (the other terms of c_k) - e (a0 b0 - 1), where e_0 is
  // the constant coefficient on e's side
  const bool is_a = e.kind == Kind::A;
  const unsigned k = e.index;
  const MultiPoly lead = is_a ? var(coeff_a(0)) : var(coeff_b(0));
  w.rel_coeffs[k - 1] = lead;
  w.unit_coeff = -var(e);
  const unsigned upto = std::min(k, is_a ? m_ : n_);
  for (unsigned r = 1; r <= upto; ++r) {
    // premise r on the other side, paired with index k - r on e's side
    const Indeterminate premise = is_a ? coeff_b(r) : coeff_a(r);
    const Indeterminate partner = is_a ? coeff_a(k - r) : coeff_b(k - r);
    w += membership_witness(label, premise).scaled(-(lead * var(partner)));
  }
  w.subject = var(e);
  return w;
}

MembershipWitness WitnessBuilder::gauss_product_witness(unsigned i, unsigned j,
                                                        const IdealLabel& label) {
  MembershipWitness w = MembershipWitness::zero(label);
  const unsigned k = i + j;
  w.rel_coeffs[k - 1] = MultiPoly(1);
  for (unsigned p = i + 1; p <= std::min(n_, k); ++p) {
    const unsigned q = k - p;
    w += membership_witness(label, coeff_a(p)).scaled(-var(coeff_b(q)));
  }
  for (unsigned q = j + 1; q <= std::min(m_, k); ++q) {
    const unsigned p = k - q;
    w += membership_witness(label, coeff_b(q)).scaled(-var(coeff_a(p)));
  }
  w.subject = var(coeff_a(i)) * var(coeff_b(j));
  return w;
}

MembershipWitness WitnessBuilder::combine(const MembershipWitness& with_a,
                                          const MembershipWitness& with_b,
                                          const MembershipWitness& product, unsigned i,
                                          unsigned j) const {
  const IdealLabel& parent = product.label;
  if (with_a.label != parent.with_a(i) || with_b.label != parent.with_b(j))
    throw std::invalid_argument("combine: child labels do not extend the parent");

  // u^k = v + s a_i, u^l = w + t b_j with v, w supported on the parent label
  MembershipWitness v = with_a;
  const MultiPoly s = v.gen(coeff_a(i));
  v.gen_coeffs.erase(coeff_a(i));
  v.label = parent;
  MembershipWitness w = with_b;
  const MultiPoly t = w.gen(coeff_b(j));
  w.gen_coeffs.erase(coeff_b(j));
  w.label = parent;

  MembershipWitness out = v.scaled(with_b.subject);
  out += w.scaled(s * var(coeff_a(i)));
  out += product.scaled(s * t);
  out.subject = with_a.subject * with_b.subject;
  return out;
}

// --- certificates ------------------------------------------------------------

std::vector<MembershipWitness> node_witnesses(const Digraph& d, unsigned target,
                                              WitnessBuilder& builder) {
  const auto& nodes = d.nodes();
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return nodes[x].label.size() > nodes[y].label.size();
  });
  std::vector<std::optional<MembershipWitness>> out(nodes.size());
  for (std::size_t k : order) {
    const auto& node = nodes[k];
    if (node.is_sink()) {
      out[k] = builder.membership_witness(node.label, coeff_a(target));
    } else {
      const auto& br = std::get<Branch>(node.tag);
      out[k] = builder.combine(*out[node.first], *out[node.second],
                               builder.gauss_product_witness(br.i, br.j, node.label), br.i,
                               br.j);
    }
  }
  std::vector<MembershipWitness> result;
  result.reserve(out.size());
  for (auto& w : out) result.push_back(std::move(*w));
  return result;
}

NilpotencyCertificate extract_certificate(const Digraph& d, unsigned target,
                                          WitnessBuilder& builder) {
  NilpotencyCertificate cert;
  cert.n = d.n();
  cert.m = d.m();
  cert.target = target;
  cert.exponent = d.root().exponent;
  cert.root = std::move(node_witnesses(d, target, builder).front());
  return cert;
}

NilpotencyCertificate extract_certificate(const Digraph& d, unsigned target) {
  WitnessBuilder builder(d.n(), d.m());
  return extract_certificate(d, target, builder);
}

SymbolicCheck verify_symbolic(const NilpotencyCertificate& cert) {
  SymbolicCheck out;
  const MultiPoly lhs = pow(var(coeff_a(cert.target)), cert.exponent);
  if (cert.root.rel_coeffs.size() != static_cast<std::size_t>(cert.n) + cert.m) {
    out.diff = -lhs;
    return out;
  }
  MultiPoly rhs =
      relation_combination(cert.n, cert.m, cert.root.rel_coeffs, cert.root.unit_coeff);
  // a certificate lives at the zero ideal; stray generator terms count against it
  for (const auto& [d, coeff] : cert.root.gen_coeffs) rhs += coeff * var(d);
  out.diff = rhs - lhs;
  out.pass = out.diff.is_zero() && cert.root.gen_coeffs.empty();
  return out;
}

namespace {

std::optional<std::uint64_t> minimal_exponent(const RingHandle& ring, const mpz_class& u,
                                              std::uint64_t bound) {
  // a nilpotent of Z/N has index at most log2(N)
  const std::uint64_t scan =
      std::min<std::uint64_t>(bound, mpz_sizeinbase(ring.modulus().get_mpz_t(), 2) + 1);
  mpz_class power = ring.reduce(1);
  for (std::uint64_t e = 0; e <= scan; ++e) {
    if (power == 0) return e;
    power = ring.mul(power, u);
  }
  return std::nullopt;
}

}  // namespace

ConcreteCheck verify_concrete(const ProblemInstance& instance, unsigned target,
                              std::uint64_t exponent) {
  const auto& mode = instance.concrete_mode();
  const mpz_class& u = mode.a.at(target);
  ConcreteCheck out;
  out.power = mode.ring.pow(u, exponent);
  out.pass = out.power == 0;
  out.minimal = minimal_exponent(mode.ring, u, exponent);
  return out;
}

ConcreteCheck specialize(const NilpotencyCertificate& cert, const ProblemInstance& instance) {
  const auto& mode = instance.concrete_mode();
  if (instance.n != cert.n || instance.m != cert.m)
    throw std::invalid_argument("certificate shape differs from the instance");
  const RingHandle& ring = mode.ring;
  Assignment at;
  for (unsigned i = 0; i <= cert.n; ++i) at.emplace(coeff_a(i), mode.a[i]);
  for (unsigned j = 0; j <= cert.m; ++j) at.emplace(coeff_b(j), mode.b[j]);

  const auto c = convolution(mode.a, mode.b, ring);
  mpz_class rhs = ring.mul(eval(cert.root.unit_coeff, at, ring), ring.sub(c[0], 1));
  for (unsigned k = 1; k <= cert.n + cert.m; ++k)
    rhs = ring.add(rhs, ring.mul(eval(cert.root.rel(k), at, ring), c[k]));

  ConcreteCheck out = verify_concrete(instance, cert.target, cert.exponent);
  out.pass = out.pass && rhs == out.power;
  return out;
}

std::string dump_certificate(const NilpotencyCertificate& cert) {
  std::ostringstream out;
  out << "nilcert-certificate 1\n";
  out << "n " << cert.n << "\n";
  out << "m " << cert.m << "\n";
  out << "i0 " << cert.target << "\n";
  out << "e " << cert.exponent << "\n";
  for (unsigned k = 1; k <= cert.n + cert.m; ++k)
    out << "rel " << k << " " << cert.root.rel(k).to_string() << "\n";
  out << "unit " << cert.root.unit_coeff.to_string() << "\n";
  return out.str();
}

NilpotencyCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& what) -> void {
    throw std::invalid_argument("certificate parse error: " + what);
  };
  if (!std::getline(in, line) || line != "nilcert-certificate 1") fail("missing header");

  NilpotencyCertificate cert;
  std::optional<unsigned> n, m, target;
  std::optional<std::uint64_t> exponent;
  std::map<unsigned, MultiPoly> rel;
  std::optional<MultiPoly> unit;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    std::string rest;
    std::getline(fields >> std::ws, rest);
    if (key == "n") {
      n = static_cast<unsigned>(std::stoul(rest));
    } else if (key == "m") {
      m = static_cast<unsigned>(std::stoul(rest));
    } else if (key == "i0") {
      target = static_cast<unsigned>(std::stoul(rest));
    } else if (key == "e") {
      exponent = std::stoull(rest);
    } else if (key == "rel") {
      std::istringstream parts(rest);
      unsigned k = 0;
      parts >> k;
      std::string poly;
      std::getline(parts >> std::ws, poly);
      if (!rel.emplace(k, MultiPoly::parse(poly)).second) fail("duplicate rel " + std::to_string(k));
    } else if (key == "unit") {
      unit = MultiPoly::parse(rest);
    } else {
      fail("unknown field '" + key + "'");
    }
  }
  if (!n || !m || !target || !exponent || !unit) fail("missing field");
  if (*target < 1 || *target > *n) fail("i0 out of range");
  cert.n = *n;
  cert.m = *m;
  cert.target = *target;
  cert.exponent = *exponent;
  cert.root = MembershipWitness::zero(IdealLabel(*n, *m));
  for (const auto& [k, p] : rel) {
    if (k < 1 || k > *n + *m) fail("rel index out of range");
    cert.root.rel_coeffs[k - 1] = p;
  }
  if (rel.size() != static_cast<std::size_t>(*n) + *m) fail("missing rel entries");
  cert.root.unit_coeff = *unit;
  cert.root.subject = pow(var(coeff_a(*target)), *exponent);
  return cert;
}

std::vector<NilpotencyCertificate> parse_certificates(const std::string& text) {
  static const std::string header = "nilcert-certificate 1\n";
  std::vector<NilpotencyCertificate> out;
  std::size_t start = text.find(header);
  if (start != 0) throw std::invalid_argument("certificate parse error: missing header");
  while (start != std::string::npos) {
    const std::size_t next = text.find(header, start + header.size());
    out.push_back(parse_certificate(text.substr(start, next - start)));
    start = next;
  }
  return out;
}

}  // namespace nilcert

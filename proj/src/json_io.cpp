#include "quadtuple/json_io.hpp"

#include <exception>
#include <stdexcept>

namespace quadtuple::json {

namespace {

Integer parse_integer_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw std::invalid_argument(std::string("missing string field '") + key + "'");
  return parse_integer(j.at(key).get<std::string>());
}

}  // namespace

Json quadint(const QuadInt& x) {
  Json j;
  j["a"] = to_string(x.a);
  j["b"] = to_string(x.b);
  return j;
}

QuadInt parse_quadint(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("ring element must be a JSON object");
  return {parse_integer_field(j, "a"), parse_integer_field(j, "b")};
}

Json quadruple(const Integer& d, const Quadruple& q) {
  Json j;
  j["d"] = to_string(d);
  j["n"] = quadint(q.n);
  j["elements"] = Json::array();
  for (const QuadInt& e : q.elements) j["elements"].push_back(quadint(e));
  Json w = Json::object();
  for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
    if (q.witnesses[slot]) w[pair_label(slot)] = quadint(*q.witnesses[slot]);
  }
  j["witnesses"] = std::move(w);
  return j;
}

Quadruple parse_quadruple(const Json& j) {
  Quadruple q;
  q.n = parse_quadint(j.at("n"));
  const Json& elems = j.at("elements");
  if (!elems.is_array() || elems.size() != 4)
    throw std::invalid_argument("quadruple needs exactly four elements");
  for (std::size_t i = 0; i < 4; ++i) q.elements[i] = parse_quadint(elems[i]);
  if (j.contains("witnesses")) {
    const Json& w = j.at("witnesses");
    for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
      const std::string label = pair_label(slot);
      if (w.contains(label)) q.witnesses[slot] = parse_quadint(w.at(label));
    }
  }
  return q;
}

Json trace(const ConstructionTrace& t) {
  Json j;
  j["gamma_delta"] = quadint(t.gamma_delta);
  j["factorization"] = to_string(t.factorization);
  j["alpha1"] = quadint(t.alpha1);
  j["alpha2"] = quadint(t.alpha2);
  j["unit_a"] = quadint(t.unit_a);
  j["r"] = quadint(t.r);
  j["b"] = quadint(t.b);
  j["alpha_sym"] = quadint(t.alpha_sym);
  j["unit_index"] = t.unit_index;
  return j;
}

Json verification(const VerificationReport& r) {
  Json j;
  j["nondegenerate"] = r.nondegenerate;
  Json pairs = Json::array();
  for (std::size_t slot = 0; slot < r.pairs.size(); ++slot) {
    const PairCheck& p = r.pairs[slot];
    Json e;
    e["pair"] = pair_label(slot);
    e["value"] = quadint(p.value);
    e["witness_ok"] = p.witness_ok ? Json(*p.witness_ok) : Json(nullptr);
    e["root"] = p.root ? quadint(*p.root) : Json(nullptr);
    e["pass"] = p.pass;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  j["all_pass"] = r.all_pass();
  return j;
}

Json certificate(const NonRepCertificate& c) {
  Json j;
  j["n"] = quadint(c.n);
  j["u"] = quadint(c.u);
  j["norm_u"] = to_string(c.norm_u);
  Json checks;
  checks["d_mod_60"] = c.ring_checks.d_mod_60;
  checks["minus6_solvable"] = c.ring_checks.minus6_solvable;
  checks["pm2_unsolvable"] = c.ring_checks.pm2_unsolvable;
  j["ring_checks"] = std::move(checks);
  return j;
}

Json norm_classes(const NormEqClasses& c) {
  Json j;
  j["d"] = to_string(c.d);
  j["N"] = to_string(c.N);
  j["unit"] = quadint(c.unit.element());
  j["representatives"] = Json::array();
  for (const QuadInt& r : c.representatives) j["representatives"].push_back(quadint(r));
  return j;
}

Json report(const CounterexampleReport& r) {
  Json j;
  j["d"] = to_string(r.d);
  j["t"] = r.t;
  j["n"] = quadint(r.n);
  j["quadruple"] = quadruple(r.d, r.quadruple);
  j["certificate"] = r.certificate ? certificate(*r.certificate) : Json(nullptr);
  j["verified"] = r.verified;
  j["notes"] = r.notes;
  return j;
}

bool reverify_report(const Json& report) {
  try {
    const Integer d = parse_integer_field(report, "d");
    const QuadInt n = parse_quadint(report.at("n"));
    const RingCtx ctx(d);
    const Json& qj = report.at("quadruple");
    if (parse_integer_field(qj, "d") != d) return false;
    const Quadruple q = parse_quadruple(qj);
    if (!(q.n == n)) return false;
    if (!verify_quadruple(ctx, q).all_pass()) return false;

    const Json& cj = report.at("certificate");
    if (!cj.is_object()) return false;
    const auto cert = certify_nonrepresentable(ctx, n);
    return cert && parse_quadint(cj.at("n")) == n && parse_quadint(cj.at("u")) == cert->u &&
           cj.at("norm_u") == "1";
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace quadtuple::json

#pragma once

// JSON renderings. Every integer that can outgrow 64 bits is a decimal string;
// key order is fixed (insertion order) so output is byte-reproducible.

#include "json.hpp"

#include "quadtuple/construct.hpp"
#include "quadtuple/counterex.hpp"
#include "quadtuple/pellsolve.hpp"
#include "quadtuple/repr.hpp"

namespace quadtuple::json {

using Json = nlohmann::ordered_json;

Json quadint(const QuadInt& x);
// Throws std::invalid_argument on malformed input.
QuadInt parse_quadint(const Json& j);

// {"d":"<int>","n":..,"elements":[..],"witnesses":{"12":..,..}}
Json quadruple(const Integer& d, const Quadruple& q);
Quadruple parse_quadruple(const Json& j);

Json trace(const ConstructionTrace& t);
Json verification(const VerificationReport& r);
Json certificate(const NonRepCertificate& c);
Json norm_classes(const NormEqClasses& c);
Json report(const CounterexampleReport& r);

// Re-checks a report using only its d, n, elements, witnesses and certificate.
bool reverify_report(const Json& report);

}  // namespace quadtuple::json

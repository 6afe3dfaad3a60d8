#pragma once

#include <json.hpp>

#include "fourierlab/catalog.hpp"
#include "fourierlab/fourier.hpp"
#include "fourierlab/numeric.hpp"
#include "fourierlab/reconstruct.hpp"

namespace fourierlab {

using Json = nlohmann::ordered_json;

// Exact values are written as strings ("p/q") so they survive the round trip.
// Readers throw InvalidArgument on malformed input.

/// ["rational part", "pi part", "pi^2 part", ...]
Json to_json(const PiPoly& p);
PiPoly pipoly_from_json(const Json& j);

/// {"r": "...", "s": "..."}
Json to_json(const Angle& a);
Angle angle_from_json(const Json& j);

/// {"domain": "half|full", "parity": "odd|even|none", "pieces": [{"lo", "hi", "coeffs"}]}
Json to_json(const PiecewiseFunction& f);
PiecewiseFunction piecewise_from_json(const Json& j);

/// [{"c": PiPoly, "kind": "sin|cos", "beta": Angle, "p": int}, ...]
Json to_json(const CoefficientFormula& cf);
CoefficientFormula formula_from_json(const Json& j);

Json to_json(const FullCoefficients& c);
Json to_json(const ParsevalResult& r);
Json to_json(const PartialSumResult& r);
Json to_json(const SampleSet& s);
Json to_json(const RecognitionResult& r);
Json to_json(const SegmentationHypothesis& h);
Json to_json(const FitResult& r);
Json to_json(const RoundtripReport& r);
Json to_json(const ReconstructionReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const CrossingResult& r);
/// Registry entry summary: id, description, sums, rhs, validity, expectation, mode.
Json to_json(const Identity& id);

}  // namespace fourierlab

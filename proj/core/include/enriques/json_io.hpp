#pragma once

#include <nlohmann/json.hpp>

#include "enriques/fibrations.hpp"
#include "enriques/sequences.hpp"
#include "enriques/weyl.hpp"

namespace enriques {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json to_json(const Integer& n);
nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const Signature& s);

nlohmann::json to_json(const GraphLattice& gl);
nlohmann::json to_json(const AdeDiagram& d, const CurveGraph& g);
nlohmann::json to_json(const AffineDiagram& d, const CurveGraph& g);
nlohmann::json to_json(const FibrationClass& f, const CurveGraph& g);
nlohmann::json to_json(const ShiodaTateReport& r);
nlohmann::json to_json(const IsotropicSequence& s);
nlohmann::json to_json(const DegenerateSequence& s, const CurveGraph& g);
nlohmann::json to_json(const ExtensionResult& r);
nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const VinbergEvidence& e, const CurveGraph& g);
nlohmann::json to_json(const ExtraSpecialConstraints& c);

}  // namespace enriques

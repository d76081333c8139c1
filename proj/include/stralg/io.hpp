#pragma once

#include <string>

#include "json.hpp"
#include "stralg/cma.hpp"
#include "stralg/core.hpp"
#include "stralg/gentle.hpp"
#include "stralg/gproj.hpp"
#include "stralg/oracle.hpp"

namespace stralg {

using json = nlohmann::ordered_json;

json presentation_json(const Presentation& pres);
json cma_json(const CmaPresentation& cma);
json representation_json(const Presentation& pres, const Representation& rep);
json structure_json(const StructureReport& rep);
json gproj_json(const Presentation& pres, const GProjReport& rep);
json reptype_json(const Presentation& pres, const RepType& rt);
json words_json(const Presentation& pres, const std::vector<Word>& words);
json dims_json(const Presentation& pres, const HomologicalDims& hd,
               const ForbiddenReport& fr);
json derived_json(const Presentation& pres, const DerivedClass& dc);
json verification_json(const CmaPresentation& cma, const VerificationReport& vr);

std::string presentation_dot(const Presentation& pres);

}  // namespace stralg

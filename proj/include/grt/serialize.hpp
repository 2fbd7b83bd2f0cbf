#pragma once
#include <string>

#include "grt/dtrans.hpp"
#include "grt/metrics.hpp"
#include "grt/realization.hpp"
#include "grt/rigidity.hpp"
#include "grt/symmetry.hpp"

// JSON / CSV / text / OBJ / SVG serialization. Everything here is
// deterministic: fixed key order (nlohmann keeps objects sorted), fixed float
// formatting, no timestamps. Identical values give identical bytes.

namespace grt {

std::string to_json(const Graph& g);                    // {"n":..,"edges":[[i,j],..]}
Graph graph_from_json(const std::string& text);

std::string spectrum_to_json(const Spectrum& s, bool include_bases = true);
std::string spectrum_to_csv(const Spectrum& s);         // theta,multiplicity rows
std::string spectrum_to_text(const Spectrum& s);

std::string realization_to_json(const Realization& r);
Realization realization_from_json(const std::string& text);
std::string realization_to_csv(const Realization& r);   // one row of coordinates per vertex

// OBJ: "v x y z" then "l i j" (1-indexed). d >= 3 required; d > 3 is projected
// onto the first three coordinates and *projected=true is set.
std::string realization_to_obj(const Realization& r, bool* projected = nullptr);
// SVG (d = 2 exactly): unit-scaled drawing with edges then vertex dots
std::string realization_to_svg(const Realization& r);

std::string perm_group_to_json(const PermGroup& g);     // order + generators (image form)
std::string transitivity_to_json(const TransitivityFlags& f);
std::string transitivity_to_text(const TransitivityFlags& f);
std::string orbitals_to_json(const OrbitalPartition& p);
std::string orbitals_to_csv(const OrbitalPartition& p); // i,j,class rows (i=j for singletons)

std::string intersection_array_to_json(const IntersectionArray& a);
std::string cosine_profile_to_json(const CosineProfile& p);
std::string metric_report_to_json(const MetricReport& m);
std::string metric_report_to_text(const MetricReport& m);
std::string rigidity_report_to_json(const RigidityReport& r);

} // namespace grt

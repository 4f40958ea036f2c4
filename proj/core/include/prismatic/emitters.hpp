#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prismatic/certificates.hpp"
#include "prismatic/dynamics.hpp"
#include "prismatic/markedbox.hpp"

namespace prismatic {

/// One box of a morphed orbit, tagged with the word that produced it
/// (outermost operation first: "ti" is t applied to i applied to the seed).
struct OrbitEntry {
  std::string word;
  MarkedBox<Rat> box;
  bool degenerate = false;
  std::string note;
};

/// All boxes w(M) and w(i(M)) for words w over {t, b} of length <= depth,
/// with every operation morphed by Sigma_{a,b}.  Degenerate branches are
/// reported and pruned; results come back in (length, word) order.
std::vector<OrbitEntry> enumerate_orbit(const MarkedBox<Rat>& seed, const Rat& a, const Rat& b,
                                        int depth);

nlohmann::ordered_json box_to_json(const std::string& word, const MarkedBox<Rat>& box);
nlohmann::ordered_json orbit_to_json(const std::vector<OrbitEntry>& entries,
                                     const nlohmann::ordered_json& config);

/// Pure-presentation SVG of the affine-patch quadrilaterals with the top and
/// bottom points marked; every number it draws lives in the JSON twin.
std::string orbit_svg(const std::vector<OrbitEntry>& entries, const std::string& config_comment);

nlohmann::ordered_json certificate_report_json(const CertificateReport& report,
                                               const nlohmann::ordered_json& config);

std::string orbit_csv(const OrbitResult& orbit, const std::string& config_comment, int digits);
std::string trace_jsonl(const OrbitResult& orbit, int digits);

}  // namespace prismatic

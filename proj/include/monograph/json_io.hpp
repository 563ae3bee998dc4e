#pragma once

#include <string>

#include <json.hpp>

#include "monograph/mpoint.hpp"
#include "monograph/pc.hpp"
#include "monograph/peaks.hpp"
#include "monograph/pl_function.hpp"
#include "monograph/point_class.hpp"
#include "monograph/witness.hpp"

namespace monograph {

// All rationals cross the JSON boundary as reduced "p/q" strings so a
// reader can re-verify certificates bit-exactly.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json pl_to_json(const PLFunction& f);
PLFunction pl_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const PeakSumModel& m);
PeakSumModel model_from_json(const nlohmann::json& j);

nlohmann::json pc_certificate_to_json(const PcCertificate& c);
PcCertificate pc_certificate_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const WitnessTriple& w);
WitnessTriple witness_from_json(const nlohmann::json& j);

nlohmann::json bracket_to_json(const MonotonicityBracket& b);

nlohmann::json mpoint_to_json(const MpointResult& r, const Rational& y, const Rational& c);

nlohmann::json oscillation_to_json(const OscillationCertificate& c);

// Writes via a temp file in the same directory plus rename, so a reader
// never sees a partial file.
void write_text_atomic(const std::string& path, const std::string& content);
void write_json_atomic(const std::string& path, const nlohmann::json& j);

}  // namespace monograph

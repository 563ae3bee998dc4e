#include "monograph/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace monograph {

nlohmann::json rational_to_json(const Rational& r) {
  Rational reduced = r;
  reduced.canonicalize();
  return to_string(reduced);
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational field must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

namespace {

nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& r : v) arr.push_back(rational_to_json(r));
  return arr;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace

nlohmann::json pl_to_json(const PLFunction& f) {
  return {{"breakpoints", rationals_to_json(f.breakpoints())},
          {"values", rationals_to_json(f.values())}};
}

PLFunction pl_from_json(const nlohmann::json& j) {
  return PLFunction(rationals_from_json(j.at("breakpoints")),
                    rationals_from_json(j.at("values")));
}

nlohmann::json model_to_json(const PeakSumModel& m) {
  return {{"peaks", m.peaks},
          {"q", rationals_to_json(m.q)},
          {"a", rationals_to_json(m.a)},
          {"b", rationals_to_json(m.b)},
          {"s", rationals_to_json(m.s)},
          {"delta", rationals_to_json(m.delta)},
          {"eps", rationals_to_json(m.eps)}};
}

PeakSumModel model_from_json(const nlohmann::json& j) {
  PeakSumModel m;
  m.peaks = j.at("peaks").get<std::size_t>();
  m.q = rationals_from_json(j.at("q"));
  m.a = rationals_from_json(j.at("a"));
  m.b = rationals_from_json(j.at("b"));
  m.s = rationals_from_json(j.at("s"));
  m.delta = rationals_from_json(j.at("delta"));
  m.eps = rationals_from_json(j.at("eps"));
  return m;
}

nlohmann::json pc_certificate_to_json(const PcCertificate& c) {
  nlohmann::json j = {{"outcome", c.pass ? "Pass" : "Fail"}, {"c", rational_to_json(c.c)}};
  if (c.witness) {
    j["witness"] = {{"x", rational_to_json(c.witness->x)},
                    {"t", rational_to_json(c.witness->t)},
                    {"y", rational_to_json(c.witness->y)}};
  }
  return j;
}

PcCertificate pc_certificate_from_json(const nlohmann::json& j) {
  PcCertificate c;
  c.pass = j.at("outcome").get<std::string>() == "Pass";
  c.c = rational_from_json(j.at("c"));
  if (j.contains("witness")) {
    const auto& w = j.at("witness");
    c.witness = PcWitness{rational_from_json(w.at("x")), rational_from_json(w.at("t")),
                          rational_from_json(w.at("y"))};
  }
  return c;
}

nlohmann::json witness_to_json(const WitnessTriple& w) {
  return {{"x", rational_to_json(w.x)},
          {"y", rational_to_json(w.y)},
          {"z", rational_to_json(w.z)},
          {"side", w.side == WitnessSide::L11 ? "L11" : "L12"},
          {"ratio_sq", rational_to_json(w.ratio_sq)},
          {"ratio_lb", rational_to_json(w.ratio_lb)}};
}

WitnessTriple witness_from_json(const nlohmann::json& j) {
  WitnessTriple w;
  w.x = rational_from_json(j.at("x"));
  w.y = rational_from_json(j.at("y"));
  w.z = rational_from_json(j.at("z"));
  w.side = j.at("side").get<std::string>() == "L12" ? WitnessSide::L12 : WitnessSide::L11;
  w.ratio_sq = rational_from_json(j.at("ratio_sq"));
  w.ratio_lb = rational_from_json(j.at("ratio_lb"));
  return w;
}

nlohmann::json bracket_to_json(const MonotonicityBracket& b) {
  nlohmann::json j = {{"c_lo", rational_to_json(b.c_lo)}, {"c_hi", rational_to_json(b.c_hi)}};
  if (b.witness) j["witness"] = witness_to_json(*b.witness);
  return j;
}

nlohmann::json mpoint_to_json(const MpointResult& r, const Rational& y, const Rational& c) {
  const char* status = r.status == MpointStatus::Refuted
                           ? "Refuted"
                           : (r.status == MpointStatus::Inconclusive ? "Inconclusive" : "NoneFound");
  nlohmann::json j = {{"y", rational_to_json(y)}, {"c", rational_to_json(c)}, {"status", status}};
  if (r.refutation) {
    j["x"] = rational_to_json(r.refutation->x);
    j["z"] = rational_to_json(r.refutation->z);
    j["quotient_lb"] = rational_to_json(r.refutation->quotient_lb);
  }
  return j;
}

nlohmann::json oscillation_to_json(const OscillationCertificate& c) {
  return {{"x", rational_to_json(c.x)},
          {"y3", rational_to_json(c.y3)},
          {"y4", rational_to_json(c.y4)},
          {"fy3", rational_to_json(c.fy3)},
          {"fy4", rational_to_json(c.fy4)},
          {"q3_lo", rational_to_json(c.q3_lo)},
          {"q3_hi", rational_to_json(c.q3_hi)},
          {"q4_lo", rational_to_json(c.q4_lo)},
          {"q4_hi", rational_to_json(c.q4_hi)},
          {"gap_lb", rational_to_json(c.gap_lb)},
          {"certified", c.certified}};
}

void write_text_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

void write_json_atomic(const std::string& path, const nlohmann::json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

}  // namespace monograph

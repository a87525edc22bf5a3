#include "balines/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "balines/error.hpp"

namespace balines {

using json = nlohmann::ordered_json;

namespace {

Rational coordinate(const json& value, const char* name) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(mpz_class(value.dump()));
  throw Error(ErrorCode::InvalidInput,
              std::string("coordinate ") + name + " must be an integer or a rational string");
}

json border_json(const Border& border) {
  return json{{"color", std::string(1, to_char(border.color))}, {"elements", border.element}};
}

}  // namespace

Instance instance_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw Error(ErrorCode::InvalidInput, "expected an object with a \"points\" array");
  }
  std::vector<ChromaticPoint> points;
  for (const auto& p : doc["points"]) {
    if (!p.is_object() || !p.contains("id") || !p.contains("x") || !p.contains("y") ||
        !p.contains("color")) {
      throw Error(ErrorCode::InvalidInput, "every point needs id, x, y and color");
    }
    if (!p["id"].is_number_integer()) throw Error(ErrorCode::InvalidInput, "point id must be an integer");
    if (!p["color"].is_string() || p["color"].get<std::string>().size() != 1) {
      throw Error(ErrorCode::InvalidInput, "point color must be \"B\" or \"R\"");
    }
    points.push_back({p["id"].get<int>(), coordinate(p["x"], "x"), coordinate(p["y"], "y"),
                      color_from_char(p["color"].get<std::string>()[0])});
  }
  return Instance(std::move(points));
}

std::string instance_to_json(const Instance& inst) {
  json pts = json::array();
  for (const auto& p : inst.points()) {
    pts.push_back(json{{"id", p.id},
                       {"x", format_rational(p.x)},
                       {"y", format_rational(p.y)},
                       {"color", std::string(1, to_char(p.color))}});
  }
  return json{{"points", pts}}.dump() + "\n";
}

AllowableSequence sequence_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  std::string colors;
  if (!(in >> n) || n < 2 || n > 100000) {
    throw Error(ErrorCode::InvalidInput, "sequence text must start with the point count");
  }
  if (!(in >> colors) || static_cast<int>(colors.size()) != n) {
    throw Error(ErrorCode::InvalidInput, "color string must have one letter per point");
  }
  std::vector<Color> cs;
  for (char c : colors) cs.push_back(color_from_char(c));
  std::vector<int> pi0(static_cast<std::size_t>(n));
  for (auto& v : pi0) {
    if (!(in >> v)) throw Error(ErrorCode::InvalidInput, "pi0 needs n entries");
  }
  const long half = static_cast<long>(n) * (n - 1) / 2;
  std::vector<int> word;
  int v = 0;
  while (in >> v) word.push_back(v);
  if (!in.eof()) throw Error(ErrorCode::InvalidInput, "non-numeric entry in the swap word");
  if (static_cast<long>(word.size()) != half) {
    throw Error(ErrorCode::InvalidInput, "swap word has " + std::to_string(word.size()) +
                                             " entries, expected " + std::to_string(half));
  }
  AllowableSequence seq(std::move(cs), std::move(pi0), std::move(word));
  if (const auto report = validate(seq); !report.clean()) {
    const auto& issue = report.issues.front();
    throw Error(ErrorCode::InvalidInput, "not an allowable sequence: " + issue.code + " " + issue.detail);
  }
  return seq;
}

std::string sequence_to_text(const AllowableSequence& seq) {
  std::ostringstream out;
  out << seq.size() << '\n';
  for (Color c : seq.colors()) out << to_char(c);
  out << '\n';
  for (std::size_t i = 0; i < seq.pi0().size(); ++i) out << (i ? " " : "") << seq.pi0()[i];
  out << '\n';
  for (int p : seq.word()) out << p << '\n';
  return out.str();
}

std::string witnesses_to_json(const WitnessSet& set, int delta) {
  json pairs = json::array();
  for (const auto& [key, w] : set) pairs.push_back(json::array({key.first, key.second}));
  return json{{"pairs", pairs}, {"count", set.size()}, {"delta", delta}}.dump() + "\n";
}

std::string certificate_to_json(const AllowableSequence& seq, const Certificate& cert) {
  json doc;
  doc["case"] = cert.kind == CertificateCase::Case1 ? 1 : 2;
  doc["n"] = seq.size();
  doc["b"] = seq.blue_count();
  doc["r"] = seq.red_count();
  doc["delta"] = seq.delta();
  doc["target"] = cert.target;
  json ws = json::array();
  for (const auto& w : cert.witnesses) {
    ws.push_back(json{{"pair", json::array({w.key().first, w.key().second})},
                      {"blue", w.blue_id},
                      {"red", w.red_id},
                      {"t", w.t},
                      {"left_weight", w.left_weight},
                      {"group", to_string(w.group)},
                      {"rank", w.rank}});
  }
  doc["witnesses"] = ws;
  if (cert.kind == CertificateCase::Case2) {
    doc["border"] = cert.border ? border_json(*cert.border) : json();
    doc["exact_border_search"] = cert.exact_border_search;
    doc["F"] = cert.f_set;
    doc["G"] = cert.g_set;
    doc["H"] = cert.h_set;
    json tx = json::array();
    for (const auto& tr : cert.ledger.transactions) {
      tx.push_back(json{{"t", tr.t},
                        {"g_rank", tr.g_rank},
                        {"target", std::string(1, tr.target)},
                        {"target_rank", tr.target_rank}});
    }
    doc["ledger"] = json{{"charge_F", cert.ledger.charge_f},
                         {"charge_H", cert.ledger.charge_h},
                         {"transactions", tx}};
  }
  json logs = json::array();
  for (const auto& log : cert.logs) {
    json events = json::array();
    for (const auto& e : log.events) {
      events.push_back(json{{"t", e.t}, {"from", e.from}, {"to", e.to}, {"kind", e.kind}});
    }
    logs.push_back(json{{"curve", log.curve}, {"events", events}});
  }
  doc["events"] = logs;
  return doc.dump() + "\n";
}

std::string report_to_json(const GeneralPositionReport& report) {
  return json{{"clean", report.clean()},
              {"collinear_triples", report.collinear_triples},
              {"parallel_pairs", report.parallel_pair_pairs},
              {"coincident_pairs", report.coincident_pairs}}
             .dump() +
         "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
}

}  // namespace balines

#pragma once
// Rendering of computed invariants as text tables, CSV, and JSON.

#include <iomanip>
#include <sstream>
#include <string>

#include "gmd/invariants.hpp"
#include "json.hpp"

namespace gmd {

using nlohmann::json;

inline std::string cell_str(const Cell& c) {
  switch (c.status) {
    case CellStatus::Value: {
      std::string s = std::to_string(c.value);
      if (c.family_empty) s += "*";
      return s;
    }
    case CellStatus::Infinity: return "inf";
    case CellStatus::Skipped: return "skip";
    default: return "n/a";
  }
}

inline json cell_json(const Cell& c) {
  json j;
  switch (c.status) {
    case CellStatus::Value:
      j["value"] = c.value;
      if (c.family_empty) j["family_empty"] = true;
      break;
    case CellStatus::Infinity:
      j["value"] = nullptr;
      j["status"] = "inf";
      break;
    case CellStatus::Skipped:
      j["value"] = nullptr;
      j["status"] = "skip";
      break;
    default:
      j["value"] = nullptr;
      j["status"] = "na";
      break;
  }
  if (c.candidates) j["candidates"] = c.candidates;
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

inline json matrix_json(const MatrixResult& mr) {
  json rows = json::array();
  for (int d = 0; d < mr.dmax; ++d) {
    json row = json::array();
    for (int r = 0; r < mr.rmax; ++r) row.push_back(cell_json(mr.cells[d][r]));
    rows.push_back(row);
  }
  return json{{"function", mr.func}, {"dmax", mr.dmax}, {"rmax", mr.rmax}, {"rows", rows}};
}

inline std::string matrix_text(const MatrixResult& mr) {
  std::ostringstream os;
  size_t width = 5;
  for (const auto& row : mr.cells)
    for (const auto& c : row) width = std::max(width, cell_str(c).size() + 1);
  os << mr.func << "(d,r)";
  bool starred = false;
  for (int r = 1; r <= mr.rmax; ++r) os << std::setw(static_cast<int>(width)) << ("r=" + std::to_string(r));
  os << "\n";
  for (int d = 1; d <= mr.dmax; ++d) {
    os << "  d=" << std::left << std::setw(3) << d << std::right;
    for (int r = 1; r <= mr.rmax; ++r) {
      const Cell& c = mr.cells[d - 1][r - 1];
      starred = starred || (c.status == CellStatus::Value && c.family_empty);
      os << std::setw(static_cast<int>(width)) << cell_str(c);
    }
    os << "\n";
  }
  if (starred) os << "  * no family qualifies; the degree is reported\n";
  return os.str();
}

inline std::string matrix_csv(const MatrixResult& mr) {
  std::ostringstream os;
  os << "d";
  for (int r = 1; r <= mr.rmax; ++r) os << ",r=" << r;
  os << "\n";
  for (int d = 1; d <= mr.dmax; ++d) {
    os << d;
    for (int r = 1; r <= mr.rmax; ++r) {
      const Cell& c = mr.cells[d - 1][r - 1];
      os << ",";
      if (c.status == CellStatus::Value) os << c.value;
      else os << cell_str(c);
    }
    os << "\n";
  }
  return os.str();
}

inline json hilbert_json(const HilbertData& hd) {
  json j;
  j["dim"] = hd.dim;
  j["degree"] = hd.degree;
  j["reg_index"] = hd.reg_index;
  j["a_invariant"] = hd.a_invariant;
  j["h_vector"] = hd.h;
  if (hd.cm_regularity) {
    j["cm_regularity"] = *hd.cm_regularity;
    j["cm_route"] = hd.cm_route;
  }
  return j;
}

inline json flags_json(const PropertyFlags& f) {
  return json{{"unmixed", tri_name(f.unmixed)},
              {"radical", tri_name(f.radical)},
              {"cohen_macaulay", tri_name(f.cohen_macaulay)},
              {"complete_intersection", tri_name(f.complete_intersection)},
              {"linear_primes", tri_name(f.linear_primes)}};
}

inline json vnumber_json(const VNumberReport& rep) {
  json j;
  j["v"] = rep.v ? json(*rep.v) : json(nullptr);
  if (!rep.note.empty()) j["note"] = rep.note;
  json loc = json::object();
  for (size_t i = 0; i < rep.prime_names.size(); ++i)
    loc[rep.prime_names[i]] = rep.local[i];
  if (!loc.empty()) j["local"] = loc;
  return j;
}

inline json socle_json(const SocleReport& rep) {
  json j;
  j["s"] = rep.s ? json(*rep.s) : json(nullptr);
  j["route"] = rep.route;
  return j;
}

template <class F>
json context_json(const IdealContext<F>& ctx) {
  json j;
  j["field"] = ctx.ring->field.name();
  j["vars"] = ctx.ring->vars;
  j["order"] = order_kind_name(ctx.ring->order.kind);
  j["min_gens"] = ctx.min_gens.size();
  j["monomial"] = ctx.monomial.has_value();
  if (ctx.points) j["points"] = ctx.points->size();
  j["hilbert"] = hilbert_json(ctx.hilbert);
  j["flags"] = flags_json(ctx.flags);
  return j;
}

}  // namespace gmd

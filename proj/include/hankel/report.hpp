#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

#include "hankel/bounds.hpp"
#include "hankel/optimize.hpp"

namespace hankel {

using Json = nlohmann::ordered_json;

inline const char* class_name(const ClassTag& tag) {
  return tag.kind() == ClassKind::Star ? "star" : "qstar-lemniscate";
}

namespace detail {

/// Doubles are serialized with 17 significant digits so a re-read report
/// reproduces every value bit-exactly.
inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void dump_value(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Json(it.key()).dump() + ": ";
        dump_value(it.value(), out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_value(v, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace detail

/// Deterministic pretty-printed JSON with 17-significant-digit floats.
inline std::string dump_json(const Json& j) {
  std::string out;
  detail::dump_value(j, out, 0);
  out += "\n";
  return out;
}

inline Json cuboid_point_json(const CuboidPoint& pt) {
  return Json{{"p", pt.p}, {"x", pt.x}, {"y", pt.y}};
}

inline Json table_json(const std::vector<FaceResult>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries)
    arr.push_back(Json{{"id", e.id}, {"max", e.max}, {"argmax", cuboid_point_json(e.argmax)}});
  return arr;
}

/// Report of one verify run.
inline Json verification_report_json(const ClassTag& tag, const OptimizationReport& r) {
  Json doc;
  doc["class"] = class_name(tag);
  if (tag.kind() == ClassKind::QStarLemniscate) doc["q"] = tag.q().value();
  doc["bound_closed_form"] = r.bound_closed_form;
  doc["bound_numeric"] = r.max_value;
  doc["argmax"] = cuboid_point_json(r.argmax);
  doc["stage"] = stage_name(r.stage);
  doc["grid_initial"] = r.grid_initial;
  doc["refinement_rounds"] = r.refinement_rounds;
  doc["face_table"] = table_json(r.face_table);
  doc["edge_table"] = table_json(r.edge_table);
  doc["extremal_h3"] = r.extremal_h3;
  doc["tolerance"] = r.tolerance_estimate;
  doc["seeds"] = r.seeds;
  return doc;
}

/// Summary of one Monte-Carlo sampling campaign.
inline Json sample_report_json(const ClassTag& tag, const DominationSweep& sweep) {
  Json doc;
  doc["class"] = class_name(tag);
  if (tag.kind() == ClassKind::QStarLemniscate) doc["q"] = tag.q().value();
  doc["bound_closed_form"] = sharp_bound(tag);
  Json s;
  s["count"] = sweep.samples;
  s["max_observed_h3"] = sweep.max_h3;
  s["seed"] = sweep.seed;
  s["violations"] = sweep.violations;
  s["bound_exceedances"] = sweep.bound_exceedances;
  s["min_slack"] = sweep.min_slack;
  if (tag.kind() == ClassKind::QStarLemniscate) {
    s["a5_residual_max"] = sweep.max_a5_residual;
    s["a5_flagged"] = sweep.max_a5_residual > kDominationSlack;
  }
  doc["samples"] = s;
  doc["tolerance"] = kDominationSlack;
  return doc;
}

/// Coefficients and |H3| of the class's extremal function.
inline Json extremal_report_json(const ClassTag& tag, const TruncatedSeries& f) {
  const CoefficientVector a = coefficients_of(f);
  Json doc;
  doc["class"] = class_name(tag);
  if (tag.kind() == ClassKind::QStarLemniscate) doc["q"] = tag.q().value();
  doc["coefficients"] =
      Json{{"a2", a.a2.real()}, {"a3", a.a3.real()}, {"a4", a.a4.real()}, {"a5", a.a5.real()}};
  doc["extremal_h3"] = std::abs(h3(a));
  doc["bound_closed_form"] = sharp_bound(tag);
  return doc;
}

inline Json face_table_report_json(const ClassTag& tag, const std::vector<FaceResult>& faces,
                                   const std::vector<FaceResult>& edges) {
  Json doc;
  doc["class"] = class_name(tag);
  if (tag.kind() == ClassKind::QStarLemniscate) doc["q"] = tag.q().value();
  doc["face_table"] = table_json(faces);
  doc["edge_table"] = table_json(edges);
  return doc;
}

/// CSV rendering: face/edge tables only, one row per table entry.
inline std::string to_csv_tables(const Json& output) {
  std::string csv = "class,q,table,id,max,p,x,y\n";
  auto add_record = [&csv](const Json& doc) {
    const std::string cls = doc.value("class", "");
    const std::string qs = doc.contains("q") ? detail::format_double(doc["q"].get<double>()) : "";
    for (const char* table : {"face_table", "edge_table"}) {
      if (!doc.contains(table)) continue;
      const std::string kind = table == std::string("face_table") ? "face" : "edge";
      for (const auto& row : doc[table]) {
        csv += cls + "," + qs + "," + kind + "," + row["id"].get<std::string>() + "," +
               detail::format_double(row["max"].get<double>()) + "," +
               detail::format_double(row["argmax"]["p"].get<double>()) + "," +
               detail::format_double(row["argmax"]["x"].get<double>()) + "," +
               detail::format_double(row["argmax"]["y"].get<double>()) + "\n";
      }
    }
  };
  if (output.is_array())
    for (const auto& doc : output) add_record(doc);
  else
    add_record(output);
  return csv;
}

/// Writes a rendered document to a file, or to standard output when the
/// path is "-".
inline void emit_document(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    if (!std::cout) throw IoFailure("failed to write report to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open output file: " + path);
  out << text;
  out.flush();
  if (!out) throw IoFailure("failed to write output file: " + path);
}

/// Re-reads an emitted JSON report.
inline Json parse_report_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open report file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace hankel

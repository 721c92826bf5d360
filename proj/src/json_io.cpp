#include "isoperilab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isoperilab/errors.hpp"

namespace isoperilab {
namespace {

void append_number(std::string& out, double v) {
  // JSON has no literal for non-finite values; emit null.
  out += std::isfinite(v) ? format_double(v) : "null";
}

void append_point(std::string& out, Vec2 p) {
  out += '[';
  append_number(out, p.x);
  out += ',';
  append_number(out, p.y);
  out += ']';
}

void append_vertices(std::string& out, const ConvexPolygon& p) {
  out += "\"vertices\":[";
  bool first = true;
  for (const Vec2& v : p.vertices()) {
    if (!first) out += ',';
    first = false;
    append_point(out, v);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ConvexPolygon parse_polygon_json(const std::string& text, const Tolerances& tol) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw BadParameter(std::string("malformed polygon JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw BadParameter("polygon JSON must be an object with a \"vertices\" array");
  std::vector<Vec2> pts;
  pts.reserve(doc["vertices"].size());
  for (const auto& entry : doc["vertices"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw BadParameter("each vertex must be a [x, y] pair of numbers");
    pts.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return make_polygon(pts, tol);
}

ConvexPolygon load_polygon(const std::string& path, const Tolerances& tol) {
  return parse_polygon_json(read_text_file(path), tol);
}

std::string polygon_to_json(const ConvexPolygon& p) {
  std::string out = "{";
  append_vertices(out, p);
  out += "}";
  return out;
}

std::string functional_report_to_json(const FunctionalReport& rep) {
  std::string out = "{\"area\":";
  append_number(out, rep.area);
  out += ",\"perimeter\":";
  append_number(out, rep.perimeter);
  out += ",\"diameter\":";
  append_number(out, rep.diameter);
  out += ",\"equivalent_radius\":";
  append_number(out, rep.equivalent_radius);
  out += ",\"deficit\":";
  append_number(out, rep.deficit);
  out += ",\"lambda_h\":";
  append_number(out, rep.lambda_h);
  out += ",\"lambda_h_center\":";
  append_point(out, rep.lambda_h_center);
  out += ",\"fraenkel\":";
  if (rep.fraenkel)
    append_number(out, *rep.fraenkel);
  else
    out += "null";
  out += ",\"f\":";
  if (rep.f)
    append_number(out, *rep.f);
  else
    out += "null";
  out += ",\"ball\":";
  out += rep.ball ? "true" : "false";
  out += "}";
  return out;
}

std::string cone_report_to_json(const ConeReport& rep) {
  std::string out = "{\"satisfied\":";
  out += rep.satisfied ? "true" : "false";
  out += ",\"sector_radius\":";
  append_number(out, rep.sector_radius);
  out += ",\"worst_boundary_point\":";
  append_point(out, rep.worst_boundary_point);
  out += ",\"worst_margin\":";
  append_number(out, rep.worst_margin);
  out += ",\"worst_direction\":";
  append_point(out, rep.worst_direction);
  out += ",\"edge_worst_margin\":";
  append_number(out, rep.edge_worst_margin);
  out += ",\"edge_worst_point\":";
  append_point(out, rep.edge_worst_point);
  out += ",\"vertex_intervals\":[";
  for (std::size_t i = 0; i < rep.vertex_intervals.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < rep.vertex_intervals[i].size(); ++j) {
      if (j) out += ',';
      out += '[';
      append_number(out, rep.vertex_intervals[i][j].lo);
      out += ',';
      append_number(out, rep.vertex_intervals[i][j].hi);
      out += ']';
    }
    out += ']';
  }
  out += "],\"samples\":[";
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    if (i) out += ',';
    out += "{\"point\":";
    append_point(out, rep.samples[i].point);
    out += ",\"direction\":";
    append_point(out, rep.samples[i].direction);
    out += ",\"margin\":";
    append_number(out, rep.samples[i].margin);
    out += '}';
  }
  out += "]}";
  return out;
}

std::string bound_report_to_json(const BoundReport& rep) {
  std::string out = "{\"corpus_size\":" + std::to_string(rep.corpus_size);
  out += ",\"delta_used\":";
  append_number(out, rep.delta_used);
  out += ",\"max_ratio\":";
  append_number(out, rep.max_ratio);
  out += ",\"violations\":" + std::to_string(rep.violations);
  out += ",\"h_r\":";
  append_number(out, rep.h_r);
  out += ",\"min_f_observed\":";
  append_number(out, rep.min_f_observed);
  out += "}";
  return out;
}

std::string opt_result_to_json(const OptResult& res) {
  std::string out = "{\"best_f\":";
  append_number(out, res.best_f);
  out += ",\"feasible\":";
  out += res.feasible ? "true" : "false";
  out += ",\"comparisons\":{\"rectangle_best\":";
  append_number(out, res.rectangle_best);
  out += ",\"achieved\":";
  append_number(out, res.best_f);
  out += "},\"trace\":[";
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(res.trace[i].iteration) + ',';
    append_number(out, res.trace[i].f);
    out += ']';
  }
  out += "],\"best_shape\":{";
  append_vertices(out, res.best_shape);
  out += "}}";
  return out;
}

std::string rect_scan_to_json(const RectScanTable& table) {
  std::string out = "{\"monotone\":";
  out += table.monotone ? "true" : "false";
  out += ",\"rows\":[";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (i) out += ',';
    out += "{\"l\":";
    append_number(out, table.rows[i].l);
    out += ",\"a\":";
    append_number(out, table.rows[i].a);
    out += ",\"f_pipeline\":";
    append_number(out, table.rows[i].f_pipeline);
    out += ",\"diff\":";
    append_number(out, table.rows[i].diff);
    out += '}';
  }
  out += "]}";
  return out;
}

std::string corpus_to_csv(const std::vector<BodyRow>& rows) {
  std::string out = "id,D,lambda_H,lambda,F,in_class,ratio\n";
  for (const BodyRow& row : rows) {
    out += std::to_string(row.id);
    out += ',';
    out += format_double(row.deficit);
    out += ',';
    out += format_double(row.lambda_h);
    out += ',';
    out += format_double(row.fraenkel);
    out += ',';
    out += format_double(row.f);
    out += ',';
    out += row.in_class ? "1" : "0";
    out += ',';
    out += format_double(row.ratio);
    out += '\n';
  }
  return out;
}

std::string rect_scan_to_csv(const RectScanTable& table) {
  std::string out = "l,a,F,diff\n";
  for (const RectScanRow& row : table.rows) {
    out += format_double(row.l);
    out += ',';
    out += format_double(row.a);
    out += ',';
    out += format_double(row.f_pipeline);
    out += ',';
    out += format_double(row.diff);
    out += '\n';
  }
  return out;
}

std::string trace_to_csv(const std::vector<TracePoint>& trace) {
  std::string out = "iteration,F\n";
  for (const TracePoint& tp : trace) {
    out += std::to_string(tp.iteration);
    out += ',';
    out += format_double(tp.f);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw BadParameter("cannot open file for writing: " + path);
  file << text;
  if (!file) throw BadParameter("failed to write file: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw BadParameter("cannot open file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

}  // namespace isoperilab

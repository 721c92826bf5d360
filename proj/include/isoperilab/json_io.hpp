#pragma once

#include <string>
#include <vector>

#include "isoperilab/cone.hpp"
#include "isoperilab/functionals.hpp"
#include "isoperilab/optimizer.hpp"
#include "isoperilab/polygon.hpp"
#include "isoperilab/verification.hpp"

namespace isoperilab {

/// Shortest fixed-width decimal form used across all emitters: printf %.17g.
/// Round-trips every finite double exactly.
std::string format_double(double v);

/// Parses {"vertices": [[x, y], ...]} and re-hulls the points.
/// Throws BadParameter on malformed JSON or schema violations.
ConvexPolygon parse_polygon_json(const std::string& text, const Tolerances& tol = {});

/// parse_polygon_json over a file's contents; BadParameter when unreadable.
ConvexPolygon load_polygon(const std::string& path, const Tolerances& tol = {});

std::string polygon_to_json(const ConvexPolygon& p);
std::string functional_report_to_json(const FunctionalReport& rep);
std::string cone_report_to_json(const ConeReport& rep);
std::string bound_report_to_json(const BoundReport& rep);
std::string opt_result_to_json(const OptResult& res);
std::string rect_scan_to_json(const RectScanTable& table);

std::string corpus_to_csv(const std::vector<BodyRow>& rows);
std::string rect_scan_to_csv(const RectScanTable& table);
std::string trace_to_csv(const std::vector<TracePoint>& trace);

/// Writes text to path, throwing BadParameter when the file cannot be opened.
void write_text_file(const std::string& path, const std::string& text);

/// Reads a whole file, throwing BadParameter when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace isoperilab

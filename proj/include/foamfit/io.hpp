#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "foamfit/dataproc.hpp"
#include "foamfit/training.hpp"

namespace foamfit {

// Shortest text that parses back to the identical double.
std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// Curve CSV: header `x,y` or `x,y,y_std`, one row per point. Round-trips
// bit-identically through format_double.
std::string curve_to_csv(const Curve& c);
Curve parse_curve_csv(const std::string& text);

// Raw recording CSV: header `t,signal,displacement`.
RawRecording parse_raw_csv(const std::string& text, Mode mode, const RawGeometry& geom);

// Geometry manifest, one `key=value` per line; keys A, L, H, R (mm, mm2).
RawGeometry parse_geometry(const std::string& text);

// Dataset manifest: JSON {label, shear_prestretch, tension, compression,
// shear}, the last three naming curve CSVs relative to the manifest.
FoamDataset load_dataset_manifest(const std::filesystem::path& path);
void save_dataset(const FoamDataset& data, const std::filesystem::path& dir);

// `epoch,total,tension,compression,shear,p22,reg`
std::string trace_to_csv(const std::vector<TraceRow>& trace);

// `mode,x,observed,predicted,residual` over all three mode grids
std::string predictions_csv(const ModelSpec& m, const FoamDataset& data);

// Per-term stress decomposition: `mode,x,term,stress_kpa`, active terms only.
std::string contributions_csv(const ModelSpec& m, const FoamDataset& data);

}  // namespace foamfit

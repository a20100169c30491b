#pragma once

#include "foamfit/dataproc.hpp"

namespace foamfit {

// Built-in mean +- std curves for the two midsole foams, 13 points per mode,
// stresses in kPa. Compression is stored signed (lambda < 1, P11 < 0); both
// foams were sheared on samples pre-compressed to lambda = 0.8.
FoamDataset builtin_dataset(const std::string& name);  // "leap" | "turbo"

}  // namespace foamfit

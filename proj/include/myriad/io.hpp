#pragma once

#include <string>
#include <vector>

#include "myriad/image.hpp"
#include "myriad/montecarlo.hpp"

namespace myriad {

/// PFM grayscale raster ("Pf", 32-bit floats, negative scale = little
/// endian, rows stored bottom to top). Lossless for unclamped images up to
/// float precision; write followed by read is bit-exact.
ImageGrid read_pfm(const std::string& path);
void write_pfm(const std::string& path, const ImageGrid& img);

/// 8-bit grayscale PNG; pixel values map to reals 0..255 exactly.
ImageGrid read_png(const std::string& path);

/// Rounds half away from zero, clamps into [0,255], writes 8-bit grayscale.
void write_png_preview(const std::string& path, const ImageGrid& img);

/// Dispatch on file extension: .pfm or .png.
ImageGrid read_image(const std::string& path);

/// CSV with header "value" or "value,weight"; the weight column is optional.
struct SamplesFile {
  std::vector<double> values;
  std::vector<double> weights;  // empty means uniform
};

SamplesFile read_samples_csv(const std::string& path);

/// Schema: trial,a_hat,gamma_hat,iter_gmf,iter_fast
void write_trials_csv(const std::string& path, const std::vector<TrialRecord>& records);

/// One row with every StudySummary field.
void write_summary_csv(const std::string& path, const StudySummary& summary);

}  // namespace myriad

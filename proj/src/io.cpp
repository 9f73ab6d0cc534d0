#include "myriad/io.hpp"

#include <png.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "myriad/errors.hpp"

namespace myriad {

namespace {

float byteswap_float(float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  bits = __builtin_bswap32(bits);
  std::memcpy(&v, &bits, sizeof(bits));
  return v;
}

constexpr bool kHostLittleEndian = std::endian::native == std::endian::little;

}  // namespace

ImageGrid read_pfm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string magic;
  int width = 0, height = 0;
  double scale = 0.0;
  in >> magic >> width >> height >> scale;
  if (magic != "Pf") throw IoError(path + ": expected grayscale PFM magic 'Pf'");
  if (width < 1 || height < 1) throw IoError(path + ": bad PFM dimensions");
  if (scale == 0.0) throw IoError(path + ": bad PFM scale");
  in.get();  // single whitespace byte terminating the header

  const bool file_little = scale < 0.0;
  std::vector<float> row(width);
  ImageGrid img(height, width);
  for (int r = height - 1; r >= 0; --r) {  // PFM rows run bottom to top
    in.read(reinterpret_cast<char*>(row.data()), width * sizeof(float));
    if (!in) throw IoError(path + ": truncated PFM data");
    for (int c = 0; c < width; ++c) {
      float v = row[c];
      if (file_little != kHostLittleEndian) v = byteswap_float(v);
      img.at(r, c) = v;
    }
  }
  return img;
}

void write_pfm(const std::string& path, const ImageGrid& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << "Pf\n" << img.width() << " " << img.height() << "\n-1\n";
  std::vector<float> row(img.width());
  for (int r = img.height() - 1; r >= 0; --r) {
    for (int c = 0; c < img.width(); ++c) {
      float v = static_cast<float>(img.at(r, c));
      if (!kHostLittleEndian) v = byteswap_float(v);
      row[c] = v;
    }
    out.write(reinterpret_cast<const char*>(row.data()), img.width() * sizeof(float));
  }
  if (!out) throw IoError("failed writing " + path);
}

ImageGrid read_png(const std::string& path) {
  FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw IoError("cannot open " + path);
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw IoError(path + ": PNG decode error");
  }
  png_init_io(png, fp);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);
  if (color_type != PNG_COLOR_TYPE_GRAY || bit_depth > 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw IoError(path + ": only 8-bit grayscale PNG input is supported");
  }
  if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  png_read_update_info(png, info);

  const int width = static_cast<int>(png_get_image_width(png, info));
  const int height = static_cast<int>(png_get_image_height(png, info));
  std::vector<png_byte> row(png_get_rowbytes(png, info));
  ImageGrid img(height, width);
  for (int r = 0; r < height; ++r) {
    png_read_row(png, row.data(), nullptr);
    for (int c = 0; c < width; ++c) img.at(r, c) = static_cast<double>(row[c]);
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return img;
}

void write_png_preview(const std::string& path, const ImageGrid& img) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw IoError("cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw IoError(path + ": PNG encode error");
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, img.width(), img.height(), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_byte> row(img.width());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const double v = std::round(img.at(r, c));  // half away from zero
      row[c] = static_cast<png_byte>(std::clamp(v, 0.0, 255.0));
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

ImageGrid read_image(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".pfm") return read_pfm(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".png") return read_png(path);
  throw IoError(path + ": unsupported image extension (use .pfm or .png)");
}

SamplesFile read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty samples file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const bool has_weight = line == "value,weight";
  if (!has_weight && line != "value")
    throw IoError(path + ": header must be 'value' or 'value,weight'");

  SamplesFile samples;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    if (!std::getline(ss, field, ','))
      throw IoError(path + ": malformed row at line " + std::to_string(lineno));
    std::size_t used = 0;
    samples.values.push_back(std::stod(field, &used));
    if (has_weight) {
      if (!std::getline(ss, field, ','))
        throw IoError(path + ": missing weight at line " + std::to_string(lineno));
      samples.weights.push_back(std::stod(field, &used));
    }
  }
  if (samples.values.empty()) throw IoError(path + ": no sample rows");
  return samples;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_trials_csv(const std::string& path, const std::vector<TrialRecord>& records) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "trial,a_hat,gamma_hat,iter_gmf,iter_fast\n";
  for (const TrialRecord& t : records)
    out << t.trial_index << "," << fmt(t.a_hat) << "," << fmt(t.gamma_hat) << ","
        << t.iterations_gmf << "," << t.iterations_fast << "\n";
  if (!out) throw IoError("failed writing " + path);
}

void write_summary_csv(const std::string& path, const StudySummary& s) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "n,trials,true_a,true_gamma,mean_iter_gmf,sd_iter_gmf,mean_iter_fast,sd_iter_fast,"
         "mean_a,sd_a,mean_gamma,sd_gamma,mse_a,mse_gamma\n";
  out << s.sample_size << "," << s.trials << "," << fmt(s.true_location) << ","
      << fmt(s.true_scale) << "," << fmt(s.mean_iter_gmf) << "," << fmt(s.sd_iter_gmf) << ","
      << fmt(s.mean_iter_fast) << "," << fmt(s.sd_iter_fast) << "," << fmt(s.mean_a) << ","
      << fmt(s.sd_a) << "," << fmt(s.mean_gamma) << "," << fmt(s.sd_gamma) << ","
      << fmt(s.mse_a) << "," << fmt(s.mse_gamma) << "\n";
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace myriad

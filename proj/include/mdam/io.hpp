#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mdam/sampler.hpp"

namespace mdam {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t x);

/// One draws file and one cell-count file per chain, the record classes,
/// and the per-coefficient acceptance rates.
void write_draws(const std::filesystem::path& dir, const DrawSet& draws);
/// Reads what write_draws wrote; chains are merged in index order.
DrawSet read_draws(const std::filesystem::path& dir);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string format() const;
  void write(const std::filesystem::path& path) const;
};

/// Splits comma-separated text with a header row. Fields may be double-quoted
/// but not span lines.
CsvTable parse_csv(const std::string& text);
/// Quotes `s` when it holds a comma, quote or line break.
std::string csv_field(const std::string& s);

std::string fmt(double x, int digits = 6);

}  // namespace mdam

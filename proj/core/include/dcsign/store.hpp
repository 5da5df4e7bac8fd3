#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dcsign/feature.hpp"
#include "dcsign/jpeg/types.hpp"

namespace dcsign {

// Append-only feature database in a single file:
//   "DCDB" | u8 version=1 | 3 reserved bytes | u32 record_count (LE)
//   then record_count frames of { u32 length (LE) | feature record }.
// The header count is the commit point: frames past it are leftovers from an
// interrupted append and are truncated when the store is next opened for
// writing.
class FeatureStore {
 public:
  enum class Mode { kReadOnly, kReadWrite };

  // Loads and CRC-checks every record. A missing file yields an empty store;
  // in kReadWrite mode it is created and locked for exclusive writing.
  // Throws IncompatibleStore on bad magic/version and CorruptRecord naming
  // the failing record's ordinal.
  static FeatureStore open(const std::filesystem::path& path, Mode mode = Mode::kReadWrite);

  // A store with no backing file.
  static FeatureStore in_memory();

  FeatureStore(FeatureStore&& other) noexcept;
  FeatureStore& operator=(FeatureStore&& other) noexcept;
  FeatureStore(const FeatureStore&) = delete;
  FeatureStore& operator=(const FeatureStore&) = delete;
  ~FeatureStore();

  const std::vector<TernaryFeature>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  const TernaryFeature* find(std::string_view image_id) const;
  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }

  // Extracts the feature and appends it. Throws Conflict on a duplicate id,
  // IoError if the store is read-only or the write fails (store unchanged).
  std::string enroll(const jpeg::CoefficientImage& img, int th, std::string image_id);
  void append(TernaryFeature feature);

 private:
  FeatureStore() = default;
  void load(Mode mode);
  void close() noexcept;

  std::optional<std::filesystem::path> path_;
  int fd_ = -1;
  bool writable_ = false;
  std::uint64_t committed_end_ = 0;
  std::vector<TernaryFeature> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace dcsign

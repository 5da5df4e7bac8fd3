#include "dcsign/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "dcsign/errors.hpp"

namespace dcsign {

namespace {

constexpr std::uint8_t kMagic[4] = {'D', 'C', 'D', 'B'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderSize = 12;
constexpr std::size_t kCountOffset = 8;

std::string errno_text(const std::string& what, const std::filesystem::path& p) {
  return what + " " + p.string() + ": " + std::strerror(errno);
}

void put_u32(std::uint8_t* out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint32_t get_u32(const std::uint8_t* b) {
  return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
         static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

void pwrite_all(int fd, const std::uint8_t* data, std::size_t n, std::uint64_t at, const std::filesystem::path& p) {
  while (n > 0) {
    const ssize_t w = ::pwrite(fd, data, n, static_cast<off_t>(at));
    if (w < 0) {
      if (errno == EINTR) continue;
      throw IoError(errno_text("write failed", p));
    }
    data += w;
    n -= static_cast<std::size_t>(w);
    at += static_cast<std::uint64_t>(w);
  }
}

std::vector<std::uint8_t> read_all(int fd, const std::filesystem::path& p) {
  struct stat st {};
  if (::fstat(fd, &st) != 0) throw IoError(errno_text("stat failed", p));
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(st.st_size));
  std::size_t got = 0;
  while (got < bytes.size()) {
    const ssize_t r = ::pread(fd, bytes.data() + got, bytes.size() - got, static_cast<off_t>(got));
    if (r < 0) {
      if (errno == EINTR) continue;
      throw IoError(errno_text("read failed", p));
    }
    if (r == 0) break;
    got += static_cast<std::size_t>(r);
  }
  bytes.resize(got);
  return bytes;
}

}  // namespace

FeatureStore FeatureStore::open(const std::filesystem::path& path, Mode mode) {
  FeatureStore s;
  s.path_ = path;
  if (mode == Mode::kReadOnly) {
    s.fd_ = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
    if (s.fd_ < 0) {
      if (errno == ENOENT) return s;
      throw IoError(errno_text("cannot open store", path));
    }
  } else {
    s.fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (s.fd_ < 0) throw IoError(errno_text("cannot open store", path));
    if (::flock(s.fd_, LOCK_EX | LOCK_NB) != 0) throw IoError(errno_text("store is locked by another writer:", path));
    s.writable_ = true;
  }
  s.load(mode);
  return s;
}

FeatureStore FeatureStore::in_memory() { return FeatureStore(); }

FeatureStore::FeatureStore(FeatureStore&& other) noexcept
    : path_(std::move(other.path_)),
      fd_(std::exchange(other.fd_, -1)),
      writable_(other.writable_),
      committed_end_(other.committed_end_),
      records_(std::move(other.records_)),
      index_(std::move(other.index_)) {}

FeatureStore& FeatureStore::operator=(FeatureStore&& other) noexcept {
  if (this != &other) {
    close();
    path_ = std::move(other.path_);
    fd_ = std::exchange(other.fd_, -1);
    writable_ = other.writable_;
    committed_end_ = other.committed_end_;
    records_ = std::move(other.records_);
    index_ = std::move(other.index_);
  }
  return *this;
}

FeatureStore::~FeatureStore() { close(); }

void FeatureStore::close() noexcept {
  if (fd_ >= 0) ::close(fd_);  // releases the flock as well
  fd_ = -1;
}

void FeatureStore::load(Mode mode) {
  const auto& p = *path_;
  const std::vector<std::uint8_t> bytes = read_all(fd_, p);
  if (bytes.empty()) {
    if (mode == Mode::kReadWrite) {
      std::uint8_t header[kHeaderSize] = {};
      std::memcpy(header, kMagic, 4);
      header[4] = kVersion;
      pwrite_all(fd_, header, kHeaderSize, 0, p);
      if (::fsync(fd_) != 0) throw IoError(errno_text("fsync failed", p));
    }
    committed_end_ = kHeaderSize;
    return;
  }
  if (bytes.size() < kHeaderSize || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw IncompatibleStore(p.string() + " is not a feature store (bad magic)");
  if (bytes[4] != kVersion)
    throw IncompatibleStore(p.string() + ": unsupported store version " + std::to_string(bytes[4]));
  const std::uint32_t count = get_u32(bytes.data() + kCountOffset);

  std::size_t at = kHeaderSize;
  records_.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    if (bytes.size() - at < 4)
      throw CorruptRecord(RecordFault::kLengthMismatch, "store truncated before record frame", k);
    const std::uint32_t len = get_u32(bytes.data() + at);
    at += 4;
    if (bytes.size() - at < len) throw CorruptRecord(RecordFault::kLengthMismatch, "store truncated inside record", k);
    TernaryFeature f;
    try {
      f = deserialize(std::span(bytes).subspan(at, len));
    } catch (const CorruptRecord& e) {
      throw CorruptRecord(e.fault(), "in " + p.string(), k);
    }
    at += len;
    if (index_.contains(f.image_id))
      throw CorruptRecord(RecordFault::kDuplicateId, "image id \"" + f.image_id + "\" repeats", k);
    index_.emplace(f.image_id, records_.size());
    records_.push_back(std::move(f));
  }
  committed_end_ = at;
  if (mode == Mode::kReadWrite && bytes.size() > at) {
    if (::ftruncate(fd_, static_cast<off_t>(at)) != 0) throw IoError(errno_text("cannot truncate", p));
    if (::fsync(fd_) != 0) throw IoError(errno_text("fsync failed", p));
  }
}

const TernaryFeature* FeatureStore::find(std::string_view image_id) const {
  auto it = index_.find(std::string(image_id));
  return it == index_.end() ? nullptr : &records_[it->second];
}

std::string FeatureStore::enroll(const jpeg::CoefficientImage& img, int th, std::string image_id) {
  TernaryFeature f = extract_feature(img, th, std::move(image_id));
  std::string id = f.image_id;
  append(std::move(f));
  return id;
}

void FeatureStore::append(TernaryFeature feature) {
  if (index_.contains(feature.image_id)) throw Conflict("image id \"" + feature.image_id + "\" already enrolled");
  if (path_ && !writable_) throw IoError("store " + path_->string() + " is open read-only");
  if (path_) {
    const auto& p = *path_;
    const std::vector<std::uint8_t> record = serialize(feature);
    std::vector<std::uint8_t> frame(4 + record.size());
    put_u32(frame.data(), static_cast<std::uint32_t>(record.size()));
    std::memcpy(frame.data() + 4, record.data(), record.size());
    std::uint8_t count[4];
    put_u32(count, static_cast<std::uint32_t>(records_.size() + 1));
    try {
      pwrite_all(fd_, frame.data(), frame.size(), committed_end_, p);
      if (::fsync(fd_) != 0) throw IoError(errno_text("fsync failed", p));
      pwrite_all(fd_, count, 4, kCountOffset, p);
      if (::fsync(fd_) != 0) throw IoError(errno_text("fsync failed", p));
    } catch (const IoError&) {
      // restore the last committed state
      std::uint8_t old[4];
      put_u32(old, static_cast<std::uint32_t>(records_.size()));
      [[maybe_unused]] const auto w = ::pwrite(fd_, old, 4, kCountOffset);
      [[maybe_unused]] const auto t = ::ftruncate(fd_, static_cast<off_t>(committed_end_));
      throw;
    }
    committed_end_ += frame.size();
  } else {
    validate(feature);
  }
  index_.emplace(feature.image_id, records_.size());
  records_.push_back(std::move(feature));
}

}  // namespace dcsign

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcsign {

// Root of every error the library throws. Callers that only need to tell
// "bad input" from "bad data" apart can catch the two intermediate classes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Stream uses a JPEG feature outside baseline sequential Huffman 8-bit.
class UnsupportedFormat : public Error {
 public:
  UnsupportedFormat(std::string marker, const std::string& what)
      : Error("unsupported JPEG (" + marker + "): " + what), marker_(std::move(marker)) {}
  const std::string& marker() const noexcept { return marker_; }

 private:
  std::string marker_;
};

class CorruptStream : public Error {
 public:
  CorruptStream(std::size_t offset, const std::string& what)
      : Error("corrupt JPEG stream at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

enum class RecordFault {
  kBadMagic,
  kVersionMismatch,
  kBadFlags,
  kLengthMismatch,
  kReservedCode,
  kChecksum,
  kDuplicateId,
};

const char* to_string(RecordFault fault) noexcept;

// A feature record (standalone or inside a store) failed validation.
// `ordinal` is the record's 0-based position in its store, or -1 outside one.
class CorruptRecord : public Error {
 public:
  CorruptRecord(RecordFault fault, const std::string& what, std::int64_t ordinal = -1);
  RecordFault fault() const noexcept { return fault_; }
  std::int64_t ordinal() const noexcept { return ordinal_; }

 private:
  RecordFault fault_;
  std::int64_t ordinal_;
};

class IncompatibleStore : public Error {
 public:
  using Error::Error;
};

// Enrolling an image_id that the store already holds.
class Conflict : public Error {
 public:
  using Error::Error;
};

}  // namespace dcsign

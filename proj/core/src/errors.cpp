#include "dcsign/errors.hpp"

namespace dcsign {

const char* to_string(RecordFault fault) noexcept {
  switch (fault) {
    case RecordFault::kBadMagic: return "bad magic";
    case RecordFault::kVersionMismatch: return "version mismatch";
    case RecordFault::kBadFlags: return "unsupported flags";
    case RecordFault::kLengthMismatch: return "length mismatch";
    case RecordFault::kReservedCode: return "reserved code";
    case RecordFault::kChecksum: return "checksum mismatch";
    case RecordFault::kDuplicateId: return "duplicate image id";
  }
  return "unknown";
}

namespace {
std::string describe(RecordFault fault, const std::string& what, std::int64_t ordinal) {
  std::string msg = "corrupt feature record";
  if (ordinal >= 0) msg += " #" + std::to_string(ordinal);
  msg += " (";
  msg += to_string(fault);
  msg += ")";
  if (!what.empty()) msg += ": " + what;
  return msg;
}
}  // namespace

CorruptRecord::CorruptRecord(RecordFault fault, const std::string& what, std::int64_t ordinal)
    : Error(describe(fault, what, ordinal)), fault_(fault), ordinal_(ordinal) {}

}  // namespace dcsign

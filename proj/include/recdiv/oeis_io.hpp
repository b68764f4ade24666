#pragma once

#include "recdiv/bigcount.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace recdiv {

/// Terms a(offset), a(offset+1), ... of an integer sequence.
struct Sequence {
  std::int64_t offset = 1;
  std::vector<BigCount> terms;

  bool empty() const { return terms.empty(); }
  /// One past the last index.
  std::int64_t end_index() const { return offset + static_cast<std::int64_t>(terms.size()); }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Malformed b-file line.
class BfileParseError : public std::runtime_error {
 public:
  BfileParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed lines whose indices are not consecutive.
class BfileFormatError : public std::runtime_error {
 public:
  BfileFormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Lines "index value" separated by spaces or tabs; '#' lines and blank lines
/// are skipped.
Sequence parse_bfile(std::string_view text);

/// One "index value\n" line per term.
std::string write_bfile(const Sequence& s);

struct TermMismatch {
  std::int64_t index = 0;
  BigCount left;
  BigCount right;
};

struct DiffReport {
  /// Overlapping index range [first, last]; empty when the sequences share no index.
  std::optional<std::pair<std::int64_t, std::int64_t>> overlap;
  std::optional<TermMismatch> first_mismatch;
  std::size_t mismatch_count = 0;
  std::size_t only_left = 0;
  std::size_t only_right = 0;

  bool match() const { return !first_mismatch.has_value(); }
};

DiffReport compare(const Sequence& a, const Sequence& b);

/// Multi-line human readable rendering of a DiffReport.
std::string to_string(const DiffReport& r);

}  // namespace recdiv

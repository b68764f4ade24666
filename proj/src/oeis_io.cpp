#include "recdiv/oeis_io.hpp"

#include <charconv>
#include <sstream>

namespace recdiv {

BfileParseError::BfileParseError(std::size_t line, const std::string& message)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + message), line_(line) {}

BfileFormatError::BfileFormatError(std::size_t line, const std::string& message)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_integer(std::string_view s) {
  std::size_t pos = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9') return false;
  }
  return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_blank(line[pos])) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !is_blank(line[pos])) ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

}  // namespace

Sequence parse_bfile(std::string_view text) {
  Sequence seq;
  bool first = true;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 2) throw BfileParseError(line_no, "expected \"index value\"");
    if (!is_integer(fields[0])) throw BfileParseError(line_no, "bad index '" + std::string(fields[0]) + "'");
    if (!is_integer(fields[1])) throw BfileParseError(line_no, "bad value '" + std::string(fields[1]) + "'");

    std::int64_t index = 0;
    auto [end, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), index);
    if (ec != std::errc() || end != fields[0].data() + fields[0].size()) {
      throw BfileParseError(line_no, "index out of range");
    }
    if (first) {
      seq.offset = index;
      first = false;
    } else if (index != seq.end_index()) {
      throw BfileFormatError(line_no, "index " + std::to_string(index) + " follows " +
                                          std::to_string(seq.end_index() - 1));
    }
    seq.terms.push_back(parse_big(std::string(fields[1])));
  }
  return seq;
}

std::string write_bfile(const Sequence& s) {
  std::string out;
  for (std::size_t k = 0; k < s.terms.size(); ++k) {
    out += std::to_string(s.offset + static_cast<std::int64_t>(k));
    out += ' ';
    out += s.terms[k].get_str();
    out += '\n';
  }
  return out;
}

DiffReport compare(const Sequence& a, const Sequence& b) {
  DiffReport r;
  const std::int64_t lo = std::max(a.offset, b.offset);
  const std::int64_t hi = std::min(a.end_index(), b.end_index());
  if (lo < hi) {
    r.overlap = std::make_pair(lo, hi - 1);
    for (std::int64_t i = lo; i < hi; ++i) {
      const auto& left = a.terms[i - a.offset];
      const auto& right = b.terms[i - b.offset];
      if (left == right) continue;
      if (!r.first_mismatch) r.first_mismatch = TermMismatch{i, left, right};
      ++r.mismatch_count;
    }
  }
  const std::size_t shared = lo < hi ? static_cast<std::size_t>(hi - lo) : 0;
  r.only_left = a.terms.size() - shared;
  r.only_right = b.terms.size() - shared;
  return r;
}

std::string to_string(const DiffReport& r) {
  std::ostringstream out;
  if (r.overlap) {
    out << "overlap: " << r.overlap->first << ".." << r.overlap->second << '\n';
  } else {
    out << "overlap: none\n";
  }
  if (r.first_mismatch) {
    out << "first mismatch: index " << r.first_mismatch->index << ": " << r.first_mismatch->left.get_str()
        << " != " << r.first_mismatch->right.get_str() << '\n'
        << "mismatches: " << r.mismatch_count << '\n';
  } else {
    out << "first mismatch: none\n";
  }
  out << "only in first: " << r.only_left << '\n' << "only in second: " << r.only_right << '\n';
  out << (r.match() ? "match" : "differ") << '\n';
  return out.str();
}

}  // namespace recdiv

#pragma once

/// @file table_io.hpp
/// Text formats, pinned byte-for-byte:
///
/// Table:   first significant line is the order n, followed by n rows of n
///          integers separated by single spaces.  Blank lines and lines
///          whose first non-space character is '#' are ignored on input.
///          Rendering emits no comments and ends with a newline.
///
/// Mask:    "n:LETTERS" where LETTERS has one character in {L, R} per
///          unordered element pair, in pair-index order, e.g. "3:LRL".

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "binx/center.hpp"
#include "binx/groupoid.hpp"

namespace binx {

/// Input rejection with position: `where` names the source (file name or
/// "<stdin>") and `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, int line, const std::string& message);

  const std::string& where() const { return where_; }
  int line() const { return line_; }

 private:
  std::string where_;
  int line_;
};

/// Reads tables from a text stream, tracking line numbers for errors.
/// Multiple tables may be read back to back from one stream.
class TableReader {
 public:
  TableReader(std::istream& in, std::string name);

  /// Consumes one complete table.  Throws ParseError on malformed input.
  Groupoid read_table();

  /// Requires that only blank/comment lines remain.  Throws ParseError on
  /// trailing content.
  void expect_end();

 private:
  bool next_significant_line(std::string& out);

  std::istream& in_;
  std::string name_;
  int line_ = 0;
};

std::string render_table(const Groupoid& g);

/// One-line rendering for diagnostics: "order 3: 0 0 2 | 1 1 1 | 0 2 2".
std::string render_compact(const Groupoid& g);

std::string render_mask_text(const PairMask& m);       ///< "3:LRL"
PairMask parse_mask_text(const std::string& text);     ///< throws ParseError

}  // namespace binx

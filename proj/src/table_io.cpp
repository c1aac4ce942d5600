#include "binx/table_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace binx {

namespace {

std::string format_where(const std::string& where, int line,
                         const std::string& message) {
  std::ostringstream out;
  out << where << " line " << line << ": " << message;
  return out.str();
}

bool is_blank_or_comment(const std::string& line) {
  for (const char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

/// Splits a line into integer tokens; returns false on a non-integer token.
bool parse_ints(const std::string& line, std::vector<long>& out,
                std::string& bad_token) {
  out.clear();
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      bad_token = token;
      return false;
    }
    if (used != token.size()) {
      bad_token = token;
      return false;
    }
    out.push_back(value);
  }
  return true;
}

}  // namespace

ParseError::ParseError(std::string where, int line, const std::string& message)
    : std::runtime_error(format_where(where, line, message)),
      where_(std::move(where)),
      line_(line) {}

TableReader::TableReader(std::istream& in, std::string name)
    : in_(in), name_(std::move(name)) {}

bool TableReader::next_significant_line(std::string& out) {
  while (std::getline(in_, out)) {
    ++line_;
    if (!is_blank_or_comment(out)) return true;
  }
  return false;
}

Groupoid TableReader::read_table() {
  std::string line;
  if (!next_significant_line(line))
    throw ParseError(name_, line_ + 1, "expected a table, found end of input");

  std::vector<long> values;
  std::string bad;
  if (!parse_ints(line, values, bad))
    throw ParseError(name_, line_, "invalid integer '" + bad + "'");
  if (values.size() != 1)
    throw ParseError(name_, line_,
                     "expected the order on a line by itself");
  if (values[0] < 1 || values[0] > Groupoid::kMaxOrder) {
    std::ostringstream msg;
    msg << "order must be in [1, " << Groupoid::kMaxOrder << "], got "
        << values[0];
    throw ParseError(name_, line_, msg.str());
  }
  const int order = static_cast<int>(values[0]);

  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(order) * order);
  for (int row = 0; row < order; ++row) {
    if (!next_significant_line(line)) {
      std::ostringstream msg;
      msg << "unexpected end of input: expected row " << row + 1 << " of "
          << order;
      throw ParseError(name_, line_ + 1, msg.str());
    }
    if (!parse_ints(line, values, bad))
      throw ParseError(name_, line_, "invalid integer '" + bad + "'");
    if (values.size() != static_cast<std::size_t>(order)) {
      std::ostringstream msg;
      msg << "expected " << order << " entries in row " << row + 1 << ", found "
          << values.size();
      throw ParseError(name_, line_, msg.str());
    }
    for (const long v : values) {
      if (v < 0 || v >= order) {
        std::ostringstream msg;
        msg << "entry " << v << " out of range [0, " << order << ")";
        throw ParseError(name_, line_, msg.str());
      }
      entries.push_back(static_cast<int>(v));
    }
  }
  return make_groupoid(order, entries);
}

void TableReader::expect_end() {
  std::string line;
  if (next_significant_line(line))
    throw ParseError(name_, line_, "unexpected trailing content");
}

std::string render_table(const Groupoid& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (y > 0) out << ' ';
      out << g(x, y);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_compact(const Groupoid& g) {
  std::ostringstream out;
  out << "order " << g.order() << ":";
  for (int x = 0; x < g.order(); ++x) {
    out << (x == 0 ? " " : " | ");
    for (int y = 0; y < g.order(); ++y) {
      if (y > 0) out << ' ';
      out << g(x, y);
    }
  }
  return out.str();
}

std::string render_mask_text(const PairMask& m) {
  std::ostringstream out;
  out << m.order() << ":" << m.letters();
  return out.str();
}

PairMask parse_mask_text(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("<mask>", 1, "expected 'order:LETTERS'");
  int order = 0;
  try {
    std::size_t used = 0;
    order = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw ParseError("<mask>", 1, "invalid mask order '" + text.substr(0, colon) + "'");
  }
  if (order < 1 || order > Groupoid::kMaxOrder)
    throw ParseError("<mask>", 1, "mask order out of range");
  try {
    return PairMask::from_letters(order, text.substr(colon + 1));
  } catch (const std::invalid_argument& e) {
    throw ParseError("<mask>", 1, e.what());
  }
}

}  // namespace binx

#include "rectdist/barcode.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rectdist {

using json = nlohmann::json;

Barcode::Barcode(std::vector<Rectangle> bars) {
  for (auto& bar : bars) push_back(std::move(bar));
}

Barcode::Barcode(std::size_t dim, std::vector<Rectangle> bars) : dim_(dim) {
  for (auto& bar : bars) push_back(std::move(bar));
}

void Barcode::push_back(Rectangle bar) {
  if (dim_ == 0) dim_ = bar.dim();
  if (bar.dim() != dim_) {
    throw DimensionMismatch("bar of dimension " + std::to_string(bar.dim()) + " in a barcode of dimension " +
                            std::to_string(dim_));
  }
  bars_.push_back(std::move(bar));
}

void require_compatible(const Barcode& left, const Barcode& right) {
  if (left.dim() != 0 && right.dim() != 0 && left.dim() != right.dim()) {
    throw DimensionMismatch("barcodes have dimensions " + std::to_string(left.dim()) + " and " +
                            std::to_string(right.dim()));
  }
}

bool same_multiset(const Barcode& a, const Barcode& b) {
  if (a.size() != b.size()) return false;
  if (!a.empty() && a.dim() != b.dim()) return false;
  auto x = a.bars();
  auto y = b.bars();
  std::sort(x.begin(), x.end(), lex_less);
  std::sort(y.begin(), y.end(), lex_less);
  return x == y;
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

// Cursor over one line of TEXT input.
class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  Rectangle parse_bar() {
    std::vector<ExtReal> lower;
    std::vector<ExtReal> upper;
    std::vector<AxisBrackets> brackets;
    for (;;) {
      skip_ws();
      parse_interval(lower, upper, brackets);
      skip_ws();
      if (at_end()) break;
      if (peek() != 'x') fail("expected ' x ' between intervals");
      ++pos_;
    }
    try {
      return Rectangle(std::move(lower), std::move(upper), std::move(brackets));
    } catch (const InvalidRectangle& e) {
      throw InvalidRectangle("line " + std::to_string(line_no_) + ": " + e.what());
    }
  }

 private:
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_no_, pos_ + 1, message); }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Bracket parse_bracket(char open, char closed) {
    skip_ws();
    if (at_end()) fail("unexpected end of line");
    const char c = peek();
    if (c != open && c != closed) fail(std::string("expected '") + open + "' or '" + closed + "'");
    ++pos_;
    return c == open ? Bracket::Open : Bracket::Closed;
  }

  ExtReal parse_number() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = peek();
      if (c == ',' || c == ')' || c == ']' || c == '(' || c == '[' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos_;
    }
    const std::string_view token = line_.substr(start, pos_ - start);
    if (token.empty()) throw ParseError(line_no_, start + 1, "expected a number");
    auto value = ExtReal::try_parse(token);
    if (!value) throw ParseError(line_no_, start + 1, "invalid number '" + std::string(token) + "'");
    return *value;
  }

  void parse_interval(std::vector<ExtReal>& lower, std::vector<ExtReal>& upper,
                      std::vector<AxisBrackets>& brackets) {
    AxisBrackets b;
    b.lower = parse_bracket('(', '[');
    lower.push_back(parse_number());
    expect(',');
    upper.push_back(parse_number());
    b.upper = parse_bracket(')', ']');
    brackets.push_back(b);
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

Barcode parse_text(std::string_view input) {
  Barcode barcode;
  std::size_t line_no = 0;
  while (!input.empty()) {
    ++line_no;
    const auto eol = input.find('\n');
    std::string_view line = input.substr(0, eol);
    input.remove_prefix(eol == std::string_view::npos ? input.size() : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
      continue;
    }
    Rectangle bar = LineParser(line, line_no).parse_bar();
    if (barcode.dim() != 0 && bar.dim() != barcode.dim()) {
      throw DimensionMismatch("line " + std::to_string(line_no) + ": bar of dimension " +
                              std::to_string(bar.dim()) + ", expected " + std::to_string(barcode.dim()));
    }
    barcode.push_back(std::move(bar));
  }
  return barcode;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view input, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < input.size(); ++i) {
    if (input[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

ExtReal json_endpoint(const json& value) {
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    auto parsed = ExtReal::try_parse(s);
    if (!parsed) throw ParseError(0, 0, "invalid endpoint \"" + s + "\"");
    return *parsed;
  }
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return ExtReal(Rational(value.get<std::uint64_t>()));
    return ExtReal(value.get<long long>());
  }
  throw ParseError(0, 0, "endpoint must be a string or an integer, got " + value.dump());
}

std::vector<ExtReal> json_corner(const json& bar, const char* key, std::size_t index) {
  if (!bar.contains(key) || !bar.at(key).is_array()) {
    throw ParseError(0, 0, "bar " + std::to_string(index) + ": missing array '" + key + "'");
  }
  std::vector<ExtReal> corner;
  for (const auto& v : bar.at(key)) corner.push_back(json_endpoint(v));
  return corner;
}

Barcode parse_json(std::string_view input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(input, e.byte);
    throw ParseError(line, column, e.what());
  }
  if (!doc.is_object()) throw ParseError(0, 0, "top-level value must be an object");
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer() || doc.at("dim").get<long long>() < 0) {
    throw ParseError(0, 0, "'dim' must be a non-negative integer");
  }
  if (!doc.contains("bars") || !doc.at("bars").is_array()) throw ParseError(0, 0, "'bars' must be an array");

  const auto dim = doc.at("dim").get<std::size_t>();
  Barcode barcode(dim);
  std::size_t index = 0;
  for (const auto& bar : doc.at("bars")) {
    if (!bar.is_object()) throw ParseError(0, 0, "bar " + std::to_string(index) + " is not an object");
    auto lower = json_corner(bar, "lower", index);
    auto upper = json_corner(bar, "upper", index);
    if (lower.size() != dim || upper.size() != dim) {
      throw DimensionMismatch("bar " + std::to_string(index) + " has corners of length " +
                              std::to_string(lower.size()) + " and " + std::to_string(upper.size()) +
                              ", expected " + std::to_string(dim));
    }
    barcode.push_back(Rectangle(std::move(lower), std::move(upper)));
    ++index;
  }
  return barcode;
}

}  // namespace

Barcode parse_barcode(std::string_view input, Format format) {
  return format == Format::Text ? parse_text(input) : parse_json(input);
}

Barcode parse_barcode(std::istream& input, Format format) {
  std::string contents{std::istreambuf_iterator<char>(input), std::istreambuf_iterator<char>()};
  return parse_barcode(std::string_view(contents), format);
}

Rectangle parse_rectangle(std::string_view literal) {
  if (literal.find('\n') != std::string_view::npos) throw ParseError(1, 1, "rectangle literal spans several lines");
  return LineParser(literal, 1).parse_bar();
}

std::string format_rectangle(const Rectangle& r) {
  std::string out;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (i > 0) out += " x ";
    out += '(';
    out += r.lower(i).to_string();
    out += ',';
    out += r.upper(i).to_string();
    out += ')';
  }
  return out;
}

std::string serialize_barcode(const Barcode& barcode, Format format) {
  if (format == Format::Text) {
    std::string out;
    for (const auto& bar : barcode.bars()) {
      out += format_rectangle(bar);
      out += '\n';
    }
    return out;
  }

  json bars = json::array();
  for (const auto& bar : barcode.bars()) {
    json lower = json::array();
    json upper = json::array();
    for (std::size_t i = 0; i < bar.dim(); ++i) {
      lower.push_back(bar.lower(i).to_string());
      upper.push_back(bar.upper(i).to_string());
    }
    bars.push_back(json{{"lower", std::move(lower)}, {"upper", std::move(upper)}});
  }
  json doc{{"dim", barcode.dim()}, {"bars", std::move(bars)}};
  return doc.dump(2) + "\n";
}

}  // namespace rectdist

#include "hilbasket/basket.hpp"

#include <algorithm>

#include "hilbasket/error.hpp"

namespace hilbasket {

Basket sorted_basket(const Basket& b) {
  Basket out;
  out.reserve(b.size());
  for (const auto& s : b) out.push_back(canonical(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_basket(const Basket& x, const Basket& y) { return sorted_basket(x) == sorted_basket(y); }

std::string to_string(const Basket& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += to_string(b[i]);
  }
  return out + "}";
}

Basket parse_basket(const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  auto last = body.find_last_not_of(" \t");
  body = body.substr(first, last - first + 1);
  if (body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorCode::ParseError, "unbalanced braces in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  Basket out;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      std::string item = body.substr(start, i - start);
      if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_singularity(item));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace hilbasket

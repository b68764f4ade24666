#include "recdiv/bigcount.hpp"

#include <stdexcept>

namespace recdiv {

BigCount parse_big(const std::string& text) {
  std::size_t pos = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (pos == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return BigCount(text, 10);
}

}  // namespace recdiv

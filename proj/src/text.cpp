#include "tarski/text.hpp"

#include <cctype>

#include "tarski/error.hpp"

namespace tarski::text {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end()
  {
    skip_space();
    return pos_ == text_.size();
  }

  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(std::string_view token)
  {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token)
  {
    if (!consume(token))
      fail("expected '" + std::string(token) + "'");
  }

  std::string word()
  {
    skip_space();
    auto const start = pos_;
    while (pos_ < text_.size()
           && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(std::string const& what) const
  {
    throw Error(ErrorKind::parse_error,
                what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<std::pair<std::string, std::string>> parse_arrow_list(std::string_view text)
{
  Cursor c(text);
  std::vector<std::pair<std::string, std::string>> out;
  c.expect("{");
  if (c.consume("}")) {
    if (!c.at_end())
      c.fail("trailing input");
    return out;
  }
  for (;;) {
    auto lhs = c.word();
    c.expect("->");
    auto rhs = c.word();
    out.emplace_back(std::move(lhs), std::move(rhs));
    if (c.consume("}"))
      break;
    c.expect(",");
  }
  if (!c.at_end())
    c.fail("trailing input");
  return out;
}

std::vector<std::string> parse_word_list(std::string_view text)
{
  Cursor c(text);
  std::vector<std::string> out;
  char const open = c.peek();
  if (open != '[' && open != '{')
    c.fail("expected '[' or '{'");
  std::string const close = open == '[' ? "]" : "}";
  c.consume(std::string_view(&open, 1));
  if (c.consume(close)) {
    if (!c.at_end())
      c.fail("trailing input");
    return out;
  }
  for (;;) {
    out.push_back(c.word());
    if (c.consume(close))
      break;
    c.expect(",");
  }
  if (!c.at_end())
    c.fail("trailing input");
  return out;
}

std::string trim(std::string_view text)
{
  auto b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  auto e = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(b, e - b + 1));
}

} // namespace tarski::text

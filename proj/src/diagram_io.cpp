#include <cctype>
#include <sstream>

#include "tangle/diagram.hpp"
#include "tangle/error.hpp"

namespace tangle {

namespace {

std::string word_text(const ObjectWord& w) {
  std::string out;
  for (int x : w) out += ' ' + std::to_string(x);
  return out;
}

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  /// Next line that is neither blank nor a comment.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      const auto end = line.find_last_not_of(" \t\r");
      line = line.substr(start, end - start + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("diagram text, line " + std::to_string(number_) + ": " + msg);
  }

 private:
  std::istringstream in_;
  int number_ = 0;
};

bool take_prefix(std::string& line, const std::string& prefix) {
  if (line.rfind(prefix, 0) != 0) return false;
  line = line.substr(prefix.size());
  return true;
}

ObjectWord parse_word(const std::string& text, const LineReader& r) {
  std::istringstream in(text);
  ObjectWord w;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      r.fail("expected an integer label, got '" + tok + "'");
    }
  }
  return w;
}

Event parse_event(const std::string& tok, const LineReader& r) {
  // kind@pos(args)
  const auto at = tok.find('@');
  const auto open = tok.find('(');
  if (at == std::string::npos || open == std::string::npos || open < at || tok.back() != ')')
    r.fail("malformed event '" + tok + "'");
  const std::string kind = tok.substr(0, at);
  std::vector<int> nums;
  try {
    nums.push_back(std::stoi(tok.substr(at + 1, open - at - 1)));
    std::string args = tok.substr(open + 1, tok.size() - open - 2);
    std::istringstream in(args);
    std::string part;
    while (std::getline(in, part, ',')) {
      std::size_t used = 0;
      nums.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    }
  } catch (const std::exception&) {
    r.fail("malformed numbers in event '" + tok + "'");
  }
  auto need = [&](std::size_t n) {
    if (nums.size() != n + 1) r.fail("event '" + tok + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "cup") {
    need(1);
    return Event::cup(nums[0], nums[1]);
  }
  if (kind == "cap") {
    need(1);
    return Event::cap(nums[0], nums[1]);
  }
  if (kind == "id") {
    need(1);
    return Event::id(nums[0], nums[1]);
  }
  if (kind == "x+" || kind == "x-") {
    need(2);
    return Event::cross(kind == "x+", nums[0], nums[1], nums[2]);
  }
  r.fail("unknown event kind '" + kind + "'");
}

}  // namespace

std::string serialize(const Diagram& d) {
  std::string out = "tangle\n";
  out += "source:" + word_text(d.source) + "\n";
  out += "target:" + word_text(d.target) + "\n";
  for (const auto& s : d.slices) {
    out += "slice:";
    for (const auto& e : s.events) out += ' ' + to_string(e);
    out += '\n';
  }
  out += "end\n";
  return out;
}

Diagram parse_diagram(const std::string& text) {
  LineReader r(text);
  std::string line;
  if (!r.next(line) || line != "tangle") r.fail("expected header 'tangle'");
  Diagram d;
  if (!r.next(line) || !take_prefix(line, "source:")) r.fail("expected 'source:'");
  d.source = parse_word(line, r);
  if (!r.next(line) || !take_prefix(line, "target:")) r.fail("expected 'target:'");
  d.target = parse_word(line, r);
  ObjectWord current = d.source;
  bool ended = false;
  while (r.next(line)) {
    if (line == "end") {
      ended = true;
      break;
    }
    if (!take_prefix(line, "slice:")) r.fail("expected 'slice:' or 'end'");
    Slice s{current, {}};
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) s.events.push_back(parse_event(tok, r));
    try {
      current = s.output();
    } catch (const Error& e) {
      r.fail(e.what());
    }
    d.slices.push_back(std::move(s));
  }
  if (!ended) r.fail("missing 'end'");
  if (r.next(line)) r.fail("text after 'end'");
  if (current != d.target)
    throw Error("diagram text: declared target " + to_string(d.target) + " but the slices produce " +
                to_string(current));
  return d;
}

}  // namespace tangle

#include <algorithm>
#include <sstream>

#include "sigform/error.hpp"
#include "sigform/realform.hpp"

namespace sigform {

namespace detail {
extern const char* const kPresetText;
}

namespace {

std::vector<int> parse_labels(const std::string& field, const std::string& line) {
  std::vector<int> out;
  if (field == "-") return out;
  std::stringstream ss(field);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw Error(Errc::ParseError, "bad label list '" + field + "' in preset line: " + line);
    }
    const int v = std::stoi(item);
    if (v < 1) throw Error(Errc::ParseError, "labels are 1-based in preset line: " + line);
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

std::vector<Preset> parse_presets(std::string_view text) {
  std::vector<Preset> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, type, invol, painted, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> type >> invol >> painted) || (fields >> extra)) {
      throw Error(Errc::ParseError, "preset line needs 4 fields: " + line);
    }
    Preset p{name, VoganDiagram::compact(CartanType::parse(type))};
    if (invol != "-") {
      p.diagram.involution = parse_labels(invol, line);
      if (p.diagram.involution.size() != static_cast<std::size_t>(p.diagram.type.rank())) {
        throw Error(Errc::ParseError, "involution length does not match rank: " + line);
      }
    }
    p.diagram.painted = parse_labels(painted, line);
    std::sort(p.diagram.painted.begin(), p.diagram.painted.end());
    if (std::any_of(out.begin(), out.end(), [&](const Preset& q) { return q.name == name; })) {
      throw Error(Errc::ParseError, "duplicate preset name " + name);
    }
    out.push_back(std::move(p));
  }
  return out;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = parse_presets(detail::kPresetText);
  return table;
}

std::optional<VoganDiagram> find_preset(std::string_view name) {
  constexpr std::string_view prefix = "compact(";
  if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix && name.back() == ')') {
    return VoganDiagram::compact(CartanType::parse(name.substr(prefix.size(), name.size() - prefix.size() - 1)));
  }
  for (const auto& p : presets())
    if (p.name == name) return p.diagram;
  return std::nullopt;
}

}  // namespace sigform

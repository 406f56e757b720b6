#include "fusionkit/table_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "fusionkit/cases.hpp"
#include "fusionkit/linear.hpp"

namespace fusionkit
{

GroupTable parse_group_table(std::string const &text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    throw std::invalid_argument(std::string("group table: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("mult") || !j.contains("prime"))
    throw std::invalid_argument("group table needs order, mult and prime");
  try {
    auto const n = j.at("order").get<std::size_t>();
    auto const mult = j.at("mult").get<std::vector<long>>();
    int const p = j.at("prime").get<int>();
    if (n == 0 || mult.size() != n * n)
      throw std::invalid_argument("mult must have order^2 entries");
    if (p < 2)
      throw std::invalid_argument("prime must be at least 2");
    std::vector<Elem> table;
    table.reserve(mult.size());
    for (long v : mult) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw std::invalid_argument("mult entry out of range");
      table.push_back(static_cast<Elem>(v));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
      if (labels.size() != n)
        throw std::invalid_argument("labels must have order entries");
    }
    auto g = FiniteGroup::from_table(n, std::move(table), std::move(labels));
    if (j.contains("name"))
      g = to_table(g, j.at("name").get<std::string>());
    return {std::move(g), p};
  } catch (nlohmann::json::exception const &e) {
    throw std::invalid_argument(std::string("group table: ") + e.what());
  } catch (GroupError const &e) {
    throw std::invalid_argument(std::string("group table: ") + e.what());
  }
}

GroupTable read_group_table(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_table(ss.str());
}

std::string group_table_json(FiniteGroup const &g, int prime)
{
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["name"] = g.name();
  j["order"] = g.order();
  j["prime"] = prime;
  std::vector<Elem> mult;
  mult.reserve(g.order() * g.order());
  std::vector<std::string> labels;
  for (Elem a = 0; a < g.order(); ++a) {
    labels.push_back(g.label(a));
    for (Elem b = 0; b < g.order(); ++b)
      mult.push_back(g.mult(a, b));
  }
  j["labels"] = labels;
  j["mult"] = mult;
  return j.dump() + "\n";
}

std::vector<std::string> builtin_group_names()
{
  return {"s3", "s4", "sl2-3", "gl2-3", "sl2-5", "gamma-2", "gamma-3", "gamma-5",
          "n-chain-2", "n-chain-3", "n-chain-5", "n-full-2", "n-full-3", "n-full-5"};
}

GroupTable builtin_group(std::string const &name)
{
  auto const dash = name.rfind('-');
  std::string const stem = dash == std::string::npos ? name : name.substr(0, dash);
  int p = 0;
  if (dash != std::string::npos) {
    try {
      p = std::stoi(name.substr(dash + 1));
    } catch (std::exception const &) {
      p = 0;
    }
  }
  if (name == "s3")
    return {to_table(symmetric_group(3), "S3"), 3};
  if (name == "s4")
    return {to_table(symmetric_group(4), "S4"), 2};
  bool const prime_ok = p == 2 || p == 3 || p == 5 || p == 7;
  if (prime_ok && (stem == "sl2" || stem == "gl2")) {
    LinearGroup lg(p, stem == "sl2" ? LinearKind::SL2 : LinearKind::GL2);
    return {to_table(lg.group(), linear_kind_name(lg.kind(), p)), p};
  }
  if (prime_ok && stem == "gamma")
    return {GammaModel(p).table, p};
  if (prime_ok && (stem == "n-chain" || stem == "n-full")) {
    auto nz = build_normalizers({CaseKind::SUp, p, 1, std::nullopt});
    if (stem == "n-chain")
      return {to_table(nz.n_chain.group(), "N(Gamma<S)"), p};
    return {to_table(nz.n_full, "N(Gamma)"), p};
  }
  throw std::invalid_argument("unknown builtin group '" + name + "'");
}

}  // namespace fusionkit

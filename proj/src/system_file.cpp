#include "coxtwist/system_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxtwist/error.hpp"

namespace coxtwist {

namespace {

using nlohmann::json;

std::vector<Generator> thetaFromJson(const json& value, std::size_t rank) {
  if (!value.is_array() || value.size() != rank)
    throw Error(ErrorCode::InvalidInput,
                "\"theta\" must be a permutation of 1.." + std::to_string(rank));
  std::vector<Generator> perm;
  for (const json& v : value) {
    const auto image = v.get<long long>();
    if (image < 1 || static_cast<std::size_t>(image) > rank)
      throw Error(ErrorCode::InvalidInput, "theta entry out of range");
    perm.push_back(static_cast<Generator>(image - 1));
  }
  return perm;
}

}  // namespace

CoxeterSystem parseSystem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput,
                std::string("system file is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("matrix"))
      throw Error(ErrorCode::InvalidInput, "system file needs a \"matrix\"");
    std::vector<std::vector<unsigned>> rows;
    for (const json& row : doc.at("matrix")) {
      rows.emplace_back();
      for (const json& entry : row) {
        const auto m = entry.get<long long>();
        if (m < 0) throw Error(ErrorCode::InvalidInput, "negative bond order");
        rows.back().push_back(static_cast<unsigned>(m));
      }
    }
    if (doc.contains("rank") && doc.at("rank").get<std::size_t>() != rows.size())
      throw Error(ErrorCode::InvalidInput, "\"rank\" does not match the matrix");
    CoxeterMatrix matrix(std::move(rows));
    Automorphism theta = Automorphism::identity(matrix.rank());
    if (doc.contains("theta") && !doc.at("theta").is_null())
      theta = Automorphism(matrix, thetaFromJson(doc.at("theta"), matrix.rank()));
    std::string name = doc.value("name", std::string{});
    return CoxeterSystem{std::move(name), std::move(matrix), std::move(theta)};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput,
                std::string("malformed system file: ") + e.what());
  }
}

CoxeterSystem loadSystem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseSystem(buffer.str());
}

std::string systemToJson(const CoxeterSystem& system) {
  json doc;
  if (!system.name.empty()) doc["name"] = system.name;
  doc["rank"] = system.matrix.rank();
  doc["matrix"] = system.matrix.rows();
  json theta = json::array();
  for (Generator g : system.theta.permutation()) theta.push_back(g + 1);
  doc["theta"] = theta;
  return doc.dump();
}

Automorphism parseTheta(std::string_view text, const CoxeterMatrix& matrix) {
  std::string cleaned(text);
  for (char& c : cleaned)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream in(cleaned);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "id")
    return Automorphism::identity(matrix.rank());
  std::vector<Generator> perm;
  for (const std::string& tok : tokens) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || value < 1 || value > matrix.rank())
      throw Error(ErrorCode::InvalidInput, "bad theta entry '" + tok + "'");
    perm.push_back(static_cast<Generator>(value - 1));
  }
  if (perm.size() != matrix.rank())
    throw Error(ErrorCode::InvalidInput,
                "theta needs " + std::to_string(matrix.rank()) + " entries");
  return Automorphism(matrix, std::move(perm));
}

std::string formatTheta(const Automorphism& theta) {
  if (theta.isIdentity()) return "id";
  std::string out;
  for (Generator g : theta.permutation()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g + 1);
  }
  return out;
}

}  // namespace coxtwist

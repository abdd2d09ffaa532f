// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "io.h"

#include <sstream>

namespace pmkit {
namespace {

[[noreturn]] void parse_error(const std::string& message, nlohmann::json detail = {}) {
  throw Error(ErrorCode::kParseError, message, std::move(detail));
}

// Splits "e,f" into labels; "" is the empty set.
std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  if (key.empty()) return out;
  std::string cur;
  for (char c : key) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

RankTable polymatroid_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) parse_error("polymatroid must be a JSON object");
  if (doc.contains("format") &&
      (!doc["format"].is_number_integer() || doc["format"].get<int>() != kFormatVersion)) {
    parse_error("unsupported format", {{"format", doc["format"]}});
  }
  for (const char* field : {"ground", "k", "ranks"}) {
    if (!doc.contains(field)) parse_error(std::string("missing field '") + field + "'");
  }
  if (!doc["ground"].is_array()) parse_error("'ground' must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& l : doc["ground"]) {
    if (!l.is_string()) parse_error("'ground' must be an array of strings");
    labels.push_back(l.get<std::string>());
  }
  if (static_cast<int>(labels.size()) > limits().max_elements) {
    throw Error(ErrorCode::kLimitExceeded,
                "ground set has " + std::to_string(labels.size()) +
                    " elements; configured maximum is " +
                    std::to_string(limits().max_elements),
                {{"size", labels.size()}, {"max_elements", limits().max_elements}});
  }
  GroundSet ground(std::move(labels));
  if (!doc["k"].is_number_integer()) parse_error("'k' must be an integer");
  const int64_t k = doc["k"].get<int64_t>();

  const auto& ranks_doc = doc["ranks"];
  if (!ranks_doc.is_object()) parse_error("'ranks' must be an object");
  std::vector<int64_t> ranks(ground.subset_count(), 0);
  std::vector<bool> seen(ground.subset_count(), false);
  for (const auto& [key, value] : ranks_doc.items()) {
    Subset s;
    try {
      s = ground.subset_of(split_key(key));
    } catch (const Error&) {
      parse_error("rank key '" + key + "' names an unknown element", {{"key", key}});
    }
    if (ground.key_of(s) != key) {
      parse_error("rank key '" + key + "' must list distinct labels in ground order",
                  {{"key", key}, {"expected", ground.key_of(s)}});
    }
    if (!value.is_number_integer()) {
      parse_error("rank of '" + key + "' must be an integer", {{"key", key}});
    }
    ranks[s.bits()] = value.get<int64_t>();
    seen[s.bits()] = true;
  }
  for (uint32_t s = 0; s < seen.size(); ++s) {
    if (!seen[s]) {
      parse_error("missing rank for subset '" + ground.key_of(Subset(s)) + "'",
                  {{"key", ground.key_of(Subset(s))}});
    }
  }
  return RankTable::validate(std::move(ground), k, std::move(ranks));
}

RankTable parse_polymatroid(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return polymatroid_from_json(doc);
}

OrderedJson polymatroid_to_json(const RankTable& rho) {
  OrderedJson doc;
  doc["format"] = kFormatVersion;
  doc["ground"] = rho.ground().labels();
  doc["k"] = rho.k();
  OrderedJson ranks = OrderedJson::object();
  for (uint32_t s = 0; s < rho.ground().subset_count(); ++s) {
    ranks[rho.ground().key_of(Subset(s))] = rho.rank(Subset(s));
  }
  doc["ranks"] = std::move(ranks);
  return doc;
}

std::string serialize_polymatroid(const RankTable& rho) {
  return polymatroid_to_json(rho).dump(2) + "\n";
}

OrderedJson witness_to_json(const MinorWitness& w, const GroundSet& ground) {
  OrderedJson contract = OrderedJson::object(), keep = OrderedJson::object();
  for (int i = 0; i < ground.size(); ++i) {
    contract[ground.label(i)] = w.contract[static_cast<size_t>(i)];
    keep[ground.label(i)] = w.keep[static_cast<size_t>(i)];
  }
  OrderedJson out;
  out["uniform"] = {w.rank, w.size};
  out["contract"] = std::move(contract);
  out["keep"] = std::move(keep);
  return out;
}

OrderedJson decomposition_to_json(const CornerDecomposition& d) {
  OrderedJson out;
  out["n"] = d.n;
  out["tau"] = polymatroid_to_json(d.tau);
  out["coloops"] = d.r.ground.labels_of(d.r.coloops);
  return out;
}

OrderedJson catalog_to_json(const ClassSpec& cls, const std::vector<ExcludedMinorRecord>& records,
                            const CatalogMeta& meta) {
  OrderedJson doc;
  doc["format"] = kFormatVersion;
  doc["class"] = {{"a", cls.a}, {"b", cls.b}, {"k", cls.k}};
  OrderedJson md;
  md["tool_version"] = kToolVersion;
  md["source"] = meta.source;
  md["max_elements"] = meta.max_elements;
  md["budget"] = meta.budget;
  if (meta.timestamp) md["timestamp"] = *meta.timestamp;
  doc["metadata"] = std::move(md);
  OrderedJson list = OrderedJson::array();
  for (const auto& r : records) {
    OrderedJson entry;
    entry["polymatroid"] = polymatroid_to_json(r.polymatroid);
    entry["tags"] = r.tags;
    OrderedJson ws = OrderedJson::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w, r.polymatroid.ground()));
    entry["witnesses"] = std::move(ws);
    list.push_back(std::move(entry));
  }
  doc["records"] = std::move(list);
  return doc;
}

std::string points_to_csv(const GroundSet& ground, const std::vector<LatticePoint>& points) {
  std::ostringstream out;
  for (int i = 0; i < ground.size(); ++i) out << (i ? "," : "") << ground.label(i);
  out << '\n';
  for (const auto& p : points) {
    for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace pmkit

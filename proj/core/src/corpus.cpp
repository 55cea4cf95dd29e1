#include "hanzigraph/corpus.hpp"

#include <fstream>
#include <sstream>

#include "hanzigraph/utf8.hpp"
#include "json.hpp"

namespace hanzi {
namespace {

using nlohmann::json;

constexpr int kStoreVersion = 1;

template <typename T>
void tally(MergeSummary& s, bool existed, std::optional<T>& slot, T value) {
  if (slot && *slot == value) {
    ++s.unchanged;
    return;
  }
  slot = std::move(value);
  existed ? ++s.updated : ++s.added;
}

json stroke_to_json(const StrokeInstance& s) {
  json j;
  j["type"] = std::string(abbreviation(s.type));
  j["box"] = {s.box.left, s.box.top, s.box.right, s.box.bottom};
  if (s.head) j["head"] = *s.head;
  if (s.tail) j["tail"] = *s.tail;
  return j;
}

StrokeInstance stroke_from_json(const json& j, std::size_t index) {
  StrokeInstance s;
  const auto type = stroke_type_from(j.at("type").get<std::string>());
  if (!type) throw DataError("unknown stroke type " + j.at("type").dump());
  s.type = *type;
  const auto& box = j.at("box");
  if (!box.is_array() || box.size() != 4) throw DataError("stroke box must have four numbers");
  s.box = {box[0].get<double>(), box[1].get<double>(), box[2].get<double>(), box[3].get<double>()};
  if (j.contains("head")) s.head = j["head"].get<std::string>();
  if (j.contains("tail")) s.tail = j["tail"].get<std::string>();
  s.doc_index = index;
  return s;
}

json record_to_json(const CharacterRecord& r) {
  json j;
  j["cp"] = utf8::hex(r.ch);
  j["char"] = utf8::encode(r.ch);
  if (r.strokes) {
    json strokes = json::array();
    for (const auto& s : r.strokes->strokes) strokes.push_back(stroke_to_json(s));
    j["strokes"] = std::move(strokes);
  }
  if (r.ids) j["ids"] = *r.ids;
  if (r.radical) {
    j["radical"] = {{"index", r.radical->radical_index},
                    {"extra", r.radical->extra_strokes},
                    {"simplified", r.radical->simplified}};
  }
  if (!r.synsets.empty()) j["synsets"] = r.synsets;
  if (!r.glosses.empty()) j["glosses"] = r.glosses;
  return j;
}

CharacterRecord record_from_json(const json& j) {
  CharacterRecord r;
  r.ch = utf8::parse_hex(j.at("cp").get<std::string>());
  if (j.contains("strokes")) {
    StrokeSet set;
    set.ch = r.ch;
    for (const auto& s : j["strokes"]) set.strokes.push_back(stroke_from_json(s, set.strokes.size()));
    r.strokes = std::move(set);
  }
  if (j.contains("ids")) r.ids = j["ids"].get<std::string>();
  if (j.contains("radical")) {
    const auto& rad = j["radical"];
    r.radical = RadicalInfo{r.ch, rad.at("index").get<int>(), rad.at("extra").get<int>(),
                            rad.at("simplified").get<bool>()};
  }
  if (j.contains("synsets")) r.synsets = j["synsets"].get<std::set<std::string>>();
  if (j.contains("glosses")) r.glosses = j["glosses"].get<std::vector<std::string>>();
  return r;
}

}  // namespace

MergeSummary Corpus::merge_strokes(const std::vector<StrokeSet>& sets) {
  MergeSummary s;
  for (const auto& set : sets) {
    const bool existed = records.count(set.ch) > 0;
    auto& rec = records[set.ch];
    rec.ch = set.ch;
    tally(s, existed, rec.strokes, set);
  }
  return s;
}

MergeSummary Corpus::merge_ids(const IdsLoadResult& ids) {
  MergeSummary s;
  s.warnings = ids.warnings;
  for (const auto& [ch, text] : ids.texts) {
    const bool existed = records.count(ch) > 0;
    auto& rec = records[ch];
    rec.ch = ch;
    tally(s, existed, rec.ids, text);
  }
  return s;
}

MergeSummary Corpus::merge_unihan(const UnihanData& unihan) {
  MergeSummary s;
  s.warnings = unihan.warnings;
  s.skipped = unihan.warnings.size();
  std::set<char32_t> chars;
  for (const auto& [ch, info] : unihan.radicals) chars.insert(ch);
  for (const auto& [ch, g] : unihan.glosses) chars.insert(ch);
  for (char32_t ch : chars) {
    const bool existed = records.count(ch) > 0;
    auto& rec = records[ch];
    rec.ch = ch;
    bool changed = false;
    if (const auto it = unihan.radicals.find(ch); it != unihan.radicals.end() && rec.radical != it->second) {
      rec.radical = it->second;
      changed = true;
    }
    if (const auto it = unihan.glosses.find(ch); it != unihan.glosses.end() && rec.glosses != it->second) {
      rec.glosses = it->second;
      changed = true;
    }
    if (!changed) ++s.unchanged;
    else existed ? ++s.updated : ++s.added;
  }
  return s;
}

MergeSummary Corpus::merge_senses(const SenseMap& senses) {
  MergeSummary s;
  for (const auto& [lemma, synsets] : senses.lemma_to_synsets) {
    const char32_t ch = utf8::single(lemma);
    std::set<std::string>* target = nullptr;
    bool existed = true;
    if (ch) {
      existed = records.count(ch) > 0;
      auto& rec = records[ch];
      rec.ch = ch;
      target = &rec.synsets;
    } else {
      existed = compounds.count(lemma) > 0;
      target = &compounds[lemma];
    }
    const std::size_t before = target->size();
    target->insert(synsets.begin(), synsets.end());
    if (target->size() == before) ++s.unchanged;
    else existed ? ++s.updated : ++s.added;
  }
  return s;
}

MergeSummary Corpus::merge_relations(const HypernymyIndex& incoming) {
  MergeSummary s;
  for (const auto& [parent, children] : incoming.children) {
    for (const auto& child : children) {
      const bool fresh = relations.children[parent].insert(child).second;
      fresh ? ++s.added : ++s.unchanged;
    }
  }
  return s;
}

IdsDatabase Corpus::ids_database() const {
  IdsDatabase db;
  for (const auto& [ch, rec] : records) {
    if (rec.ids) db.insert(ch, parse_ids(*rec.ids));
  }
  return db;
}

SenseMap Corpus::sense_map() const {
  SenseMap m;
  for (const auto& [ch, rec] : records) {
    for (const auto& s : rec.synsets) m.add(utf8::encode(ch), s);
  }
  for (const auto& [lemma, synsets] : compounds) {
    for (const auto& s : synsets) m.add(lemma, s);
  }
  return m;
}

std::string write_store(const Corpus& corpus) {
  std::string out;
  json header;
  header["hanzigraph_store"] = kStoreVersion;
  header["config"] = {{"q", corpus.config.q},
                      {"lambda_main", corpus.config.lambda_main},
                      {"theta_s", corpus.config.theta_s},
                      {"seed", corpus.config.seed}};
  out += header.dump() + '\n';
  for (const auto& [ch, rec] : corpus.records) out += record_to_json(rec).dump() + '\n';
  for (const auto& [lemma, synsets] : corpus.compounds) {
    out += json{{"lemma", lemma}, {"synsets", synsets}}.dump() + '\n';
  }
  for (const auto& [parent, children] : corpus.relations.children) {
    for (const auto& child : children) out += json{{"hype", {parent, child}}}.dump() + '\n';
  }
  return out;
}

Corpus read_store(std::string_view text) {
  Corpus corpus;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      if (j.contains("hanzigraph_store")) {
        if (j["hanzigraph_store"].get<int>() != kStoreVersion) throw DataError("unsupported store version");
        const auto& c = j.at("config");
        corpus.config = {c.at("q").get<double>(), c.at("lambda_main").get<double>(),
                         c.at("theta_s").get<std::size_t>(), c.at("seed").get<std::uint64_t>()};
        seen_header = true;
      } else if (j.contains("cp")) {
        auto rec = record_from_json(j);
        if (!corpus.records.emplace(rec.ch, rec).second) {
          throw DataError("duplicate record for U+" + utf8::hex(rec.ch));
        }
      } else if (j.contains("lemma")) {
        corpus.compounds[j["lemma"].get<std::string>()] = j.at("synsets").get<std::set<std::string>>();
      } else if (j.contains("hype")) {
        const auto& pair = j["hype"];
        corpus.relations.add(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
      } else {
        throw DataError("unrecognized store line");
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("store: ") + e.what(), lineno);
    } catch (const DataError& e) {
      throw ParseError(std::string("store: ") + e.what(), lineno);
    }
  }
  if (lineno > 0 && !seen_header) throw ParseError("store: missing header line", 1);
  return corpus;
}

Corpus load_store(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read store " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_store(buf.str());
}

void save_store(const Corpus& corpus, const std::filesystem::path& path) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write store " + path.string());
    out << write_store(corpus);
    if (!out) throw Error("failed writing store " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hanzi

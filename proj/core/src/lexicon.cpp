#include "hanzigraph/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "hanzigraph/utf8.hpp"

namespace hanzi {
namespace {

// NFKC images of U+2F00..U+2FD5.
constexpr std::u32string_view kUnified =
    U"一丨丶丿乙亅二亠人儿入八冂冖冫几凵刀力勹匕匚匸十卜卩厂厶又口囗土士夂夊夕大女子宀寸小尢尸屮山巛工己巾干幺广廴廾"
    U"弋弓彐彡彳心戈戶手支攴文斗斤方无日曰月木欠止歹殳毋比毛氏气水火爪父爻爿片牙牛犬玄玉瓜瓦甘生用田疋疒癶白皮皿目"
    U"矛矢石示禸禾穴立竹米糸缶网羊羽老而耒耳聿肉臣自至臼舌舛舟艮色艸虍虫血行衣襾見角言谷豆豕豸貝赤走足身車辛辰辵邑"
    U"酉釆里金長門阜隶隹雨靑非面革韋韭音頁風飛食首香馬骨高髟鬥鬯鬲鬼魚鳥鹵鹿麥麻黃黍黑黹黽鼎鼓鼠鼻齊齒龍龜龠";
static_assert(kUnified.size() == kRadicalCount);

struct VariantRow {
  int index;
  std::u32string_view forms;
};

// Positional and simplified spellings used inside decompositions.
constexpr VariantRow kVariants[] = {
    {9, U"亻"},     {18, U"刂"},    {26, U"㔾"},    {47, U"川"},    {58, U"彑"},   {61, U"忄⺗"},
    {64, U"扌"},    {66, U"攵"},    {71, U"旡"},    {85, U"氵氺"},  {86, U"灬"},   {87, U"爫"},
    {90, U"丬"},    {93, U"牜"},    {94, U"犭"},    {96, U"王⺩"},  {113, U"礻"},  {120, U"纟糹"},
    {122, U"罒⺳罓"}, {125, U"耂"},   {130, U"⺼"},   {140, U"艹⺾"},  {145, U"衤"},  {146, U"西覀"},
    {147, U"见"},   {149, U"讠訁"},  {154, U"贝"},   {159, U"车"},   {162, U"辶⻌"}, {163, U"阝"},
    {167, U"钅釒"},  {168, U"长镸"},  {169, U"门"},   {170, U"阝"},   {174, U"青"},  {178, U"韦"},
    {181, U"页"},   {182, U"风"},   {184, U"饣飠"},  {187, U"马"},   {195, U"鱼"},  {196, U"鸟"},
    {199, U"麦"},   {201, U"黄"},   {210, U"齐"},   {211, U"齿"},   {212, U"龙"},  {213, U"龟"},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool skip_line(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return trim(line).empty() || line[0] == '#';
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

char32_t radical_index_to_char(int index) {
  if (index < 1 || index > kRadicalCount) {
    throw std::out_of_range("radical index " + std::to_string(index) + " outside 1..214");
  }
  return kKangXiBase + static_cast<char32_t>(index - 1);
}

int radical_char_to_index(char32_t cp) noexcept {
  if (cp < kKangXiBase || cp >= kKangXiBase + kRadicalCount) return 0;
  return static_cast<int>(cp - kKangXiBase) + 1;
}

char32_t radical_unified_form(int index) {
  radical_index_to_char(index);
  return kUnified[static_cast<std::size_t>(index - 1)];
}

RadicalForms radical_forms(int index) {
  RadicalForms forms{utf8::encode(radical_index_to_char(index)), utf8::encode(radical_unified_form(index))};
  for (const auto& row : kVariants) {
    if (row.index != index) continue;
    for (char32_t cp : row.forms) forms.push_back(utf8::encode(cp));
  }
  return forms;
}

RadicalInfo parse_rs_unicode(char32_t ch, std::string_view value) {
  value = trim(value);
  value = value.substr(0, value.find(' '));
  const auto dot = value.find('.');
  if (dot == std::string_view::npos) throw DataError("kRSUnicode value '" + std::string(value) + "' lacks '.'");
  std::string_view radical = value.substr(0, dot);
  RadicalInfo info;
  info.ch = ch;
  while (!radical.empty() && radical.back() == '\'') {
    info.simplified = true;
    radical.remove_suffix(1);
  }
  info.radical_index = parse_int(radical);
  info.extra_strokes = parse_int(value.substr(dot + 1));
  if (info.radical_index < 1 || info.radical_index > kRadicalCount) {
    throw DataError("radical index " + std::to_string(info.radical_index) + " outside 1..214");
  }
  if (info.extra_strokes < 0) throw DataError("negative residual stroke count");
  return info;
}

std::vector<std::string> split_glosses(std::string_view definition) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= definition.size()) {
    const auto cut = definition.find_first_of(";,", start);
    const auto piece = trim(definition.substr(start, cut == std::string_view::npos ? std::string_view::npos : cut - start));
    if (!piece.empty()) {
      std::string lowered(piece);
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      out.push_back(std::move(lowered));
    }
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return out;
}

UnihanData parse_unihan(std::istream& in) {
  UnihanData out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 3) {
      out.warnings.push_back({lineno, "expected U+XXXX<TAB>field<TAB>value"});
      continue;
    }
    try {
      const char32_t cp = utf8::parse_hex(fields[0]);
      if (fields[1] == "kRSUnicode") {
        out.radicals[cp] = parse_rs_unicode(cp, fields[2]);
      } else if (fields[1] == "kDefinition") {
        out.glosses[cp] = split_glosses(fields[2]);
      }
    } catch (const Error& e) {
      out.warnings.push_back({lineno, e.what()});
    }
  }
  return out;
}

void SenseMap::add(const std::string& lemma, const std::string& synset) {
  lemma_to_synsets[lemma].insert(synset);
  synset_to_lemmas[synset].insert(lemma);
}

bool HypernymyIndex::add(const std::string& parent, const std::string& child) {
  if (parent == child) return false;
  children[parent].insert(child);
  return true;
}

std::size_t HypernymyIndex::size() const {
  std::size_t n = 0;
  for (const auto& [p, c] : children) n += c.size();
  return n;
}

std::string qualify_synset(const std::string& resource, const std::string& id) {
  return resource.empty() ? id : resource + ":" + id;
}

std::string synset_resource(const std::string& synset) {
  const auto colon = synset.find(':');
  return colon == std::string::npos ? std::string{} : synset.substr(0, colon);
}

SenseLoad load_senses(std::istream& in, const std::string& resource) {
  SenseLoad out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    const auto fields = split_tabs(line);
    const auto synset = fields.size() == 2 ? trim(fields[0]) : std::string_view{};
    const auto lemma = fields.size() == 2 ? trim(fields[1]) : std::string_view{};
    if (synset.empty() || lemma.empty()) {
      out.warnings.push_back({lineno, "expected synset<TAB>lemma"});
      continue;
    }
    try {
      utf8::decode(lemma);
    } catch (const DataError& e) {
      out.warnings.push_back({lineno, e.what()});
      continue;
    }
    out.senses.add(std::string(lemma), qualify_synset(resource, std::string(synset)));
  }
  return out;
}

RelationLoad load_relations(std::istream& in, const std::string& resource) {
  RelationLoad out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3 || trim(fields[1]) != "hype" || trim(fields[0]).empty() || trim(fields[2]).empty()) {
      out.warnings.push_back({lineno, "expected parent<TAB>hype<TAB>child"});
      continue;
    }
    if (!out.relations.add(qualify_synset(resource, std::string(trim(fields[0]))),
                           qualify_synset(resource, std::string(trim(fields[2]))))) {
      out.warnings.push_back({lineno, "self-referential hypernymy ignored"});
    }
  }
  return out;
}

double meaning_weight(const CharacterMeaning& a, const CharacterMeaning& b, const MeaningOptions& opts) {
  double w = 0;
  for (const auto& s : a.synsets) w += static_cast<double>(b.synsets.count(s));
  if (opts.use_glosses) {
    for (const auto& g : a.glosses) w += static_cast<double>(b.glosses.count(g));
  }
  return w;
}

MeaningEdges meaning_edges(const std::map<char32_t, CharacterMeaning>& chars, const HypernymyIndex& relations,
                           const MeaningOptions& opts) {
  std::map<std::string, std::vector<char32_t>> by_synset;
  std::map<std::string, std::vector<char32_t>> by_gloss;
  for (const auto& [ch, meaning] : chars) {
    for (const auto& s : meaning.synsets) by_synset[s].push_back(ch);
    if (opts.use_glosses) {
      for (const auto& g : meaning.glosses) by_gloss[g].push_back(ch);
    }
  }
  std::set<std::pair<char32_t, char32_t>> pairs;
  auto collect = [&pairs](const std::map<std::string, std::vector<char32_t>>& index) {
    for (const auto& [key, members] : index) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) pairs.emplace(members[i], members[j]);
      }
    }
  };
  collect(by_synset);
  collect(by_gloss);

  MeaningEdges out;
  for (const auto& [u, v] : pairs) {
    const double w = meaning_weight(chars.at(u), chars.at(v), opts);
    if (w > 0) out.m.push_back({u, v, w});
  }

  std::set<HyperEdge> h;
  const int depth = std::max(1, opts.hypernym_depth);
  for (const auto& [parent, parent_chars] : by_synset) {
    std::set<std::string> frontier{parent};
    std::set<std::string> reached;
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
      std::set<std::string> next;
      for (const auto& s : frontier) {
        const auto it = relations.children.find(s);
        if (it == relations.children.end()) continue;
        for (const auto& c : it->second) {
          if (reached.insert(c).second) next.insert(c);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& child : reached) {
      const auto it = by_synset.find(child);
      if (it == by_synset.end()) continue;
      for (char32_t k : parent_chars) {
        for (char32_t k2 : it->second) {
          if (k != k2) h.insert({k, k2, synset_resource(parent)});
        }
      }
    }
  }
  out.h.assign(h.begin(), h.end());
  return out;
}

std::map<char32_t, CharacterMeaning> character_meanings(const std::set<char32_t>& chars, const SenseMap& senses,
                                                        const std::map<char32_t, std::vector<std::string>>& glosses) {
  std::map<char32_t, CharacterMeaning> out;
  for (char32_t ch : chars) {
    CharacterMeaning m;
    if (const auto it = senses.lemma_to_synsets.find(utf8::encode(ch)); it != senses.lemma_to_synsets.end()) {
      m.synsets = it->second;
    }
    if (const auto it = glosses.find(ch); it != glosses.end()) m.glosses.insert(it->second.begin(), it->second.end());
    if (!m.synsets.empty() || !m.glosses.empty()) out.emplace(ch, std::move(m));
  }
  return out;
}

}  // namespace hanzi

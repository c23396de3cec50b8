#include "langdist/bundled.hpp"

#include <filesystem>
#include <fstream>

#include "langdist/errors.hpp"

namespace langdist::bundled {

namespace {

// language,family,bert,asjp,tree; empty cell = missing value.
const char kTable1Csv[] =
    "language,family,bert,asjp,tree\n"
    "albanian,Indo-European,0.16,0.95,0.90\n"
    "arabic,Afro Asiatic,0.23,0.99,1.00\n"
    "armenian,Indo-European,0.36,0.97,0.90\n"
    "bulgarian,Indo-European,0.16,0.87,0.90\n"
    "burmese,Sino Tibetan,0.33,,1.00\n"
    "chinese,Sino Tibetan,0.28,1.00,1.00\n"
    "croatian,Indo-European,0.20,0.87,0.90\n"
    "czech,Indo-European,0.18,0.91,0.90\n"
    "danish,Indo-European,0.18,0.67,0.90\n"
    "french,Indo-European,0.16,0.89,0.90\n"
    "german,Indo-European,0.16,0.69,0.55\n"
    "greek,Indo-European,0.22,0.97,0.90\n"
    "hebrew,Afro Asiatic,0.23,0.98,1.00\n"
    "hungarian,Uralic,0.24,0.95,1.00\n"
    "indonesian,Austronesian,0.37,0.99,1.00\n"
    "japanese,Japonic,0.38,1.01,1.00\n"
    "korean,Koreanic,0.27,1.00,1.00\n"
    "lithuanian,Indo-European,0.19,0.95,0.90\n"
    "nepali,Indo-European,0.32,0.99,0.90\n"
    "norwegian,Indo-European,0.19,0.64,0.75\n"
    "persian,Indo-European,0.21,0.92,0.90\n"
    "portuguese,Indo-European,0.15,0.90,0.90\n"
    "romanian,Indo-European,0.17,0.87,0.90\n"
    "russian,Indo-European,0.17,0.95,0.90\n"
    "serbian,Indo-European,0.20,0.00,\n"
    "slovak,Indo-European,0.19,0.92,0.90\n"
    "slovenian,Indo-European,0.17,0.91,0.90\n"
    "spanish,Indo-European,0.17,0.91,0.90\n"
    "swedish,Indo-European,0.18,0.62,0.55\n"
    "thai,Tai Kadai,0.21,0.99,1.00\n"
    "turkish,Turkic,0.34,0.98,1.00\n"
    "ukrainian,Indo-European,0.36,0.94,0.90\n"
    "vietnamese,Austroasiatic,0.22,1.04,1.00\n";

const char kTreeClassificationsCsv[] =
    "language,path\n"
    "albanian,Indo-European>Albanian\n"
    "arabic,Afro-Asiatic>Semitic>Central Semitic\n"
    "armenian,Indo-European>Armenian\n"
    "bulgarian,Indo-European>Balto-Slavic>Slavic>South Slavic\n"
    "burmese,Sino-Tibetan>Tibeto-Burman>Burmish\n"
    "chinese,Sino-Tibetan>Sinitic\n"
    "croatian,Indo-European>Balto-Slavic>Slavic>South Slavic\n"
    "czech,Indo-European>Balto-Slavic>Slavic>West Slavic\n"
    "danish,Indo-European>North Germanic>East Scandinavian\n"
    "english,Indo-European>Germanic>Northwest Germanic>North Sea Germanic\n"
    "french,Indo-European>Italic>Romance>Western Romance\n"
    "german,Indo-European>Germanic>Northwest Germanic>Elbe Germanic\n"
    "greek,Indo-European>Hellenic\n"
    "hebrew,Afro-Asiatic>Semitic>Central Semitic>Northwest Semitic\n"
    "hungarian,Uralic>Finno-Ugric>Ugric\n"
    "indonesian,Austronesian>Malayo-Polynesian>Malayic\n"
    "japanese,Japonic>Japanese\n"
    "korean,Koreanic>Korean\n"
    "lithuanian,Indo-European>Balto-Slavic>Baltic>Eastern Baltic\n"
    "nepali,Indo-European>Indo-Iranian>Indo-Aryan\n"
    "norwegian,Indo-European>Germanic>North Germanic\n"
    "persian,Indo-European>Indo-Iranian>Iranian>Western Iranian\n"
    "portuguese,Indo-European>Italic>Romance>Western Romance>Ibero-Romance\n"
    "romanian,Indo-European>Italic>Romance>Eastern Romance\n"
    "russian,Indo-European>Balto-Slavic>Slavic>East Slavic\n"
    "slovak,Indo-European>Balto-Slavic>Slavic>West Slavic\n"
    "slovenian,Indo-European>Balto-Slavic>Slavic>South Slavic\n"
    "spanish,Indo-European>Italic>Romance>Western Romance>Ibero-Romance\n"
    "swedish,Indo-European>Germanic>Northwest Germanic>North Germanic\n"
    "thai,Tai-Kadai>Tai>Southwestern Tai\n"
    "turkish,Turkic>Common Turkic>Oghuz\n"
    "ukrainian,Indo-European>Balto-Slavic>Slavic>East Slavic\n"
    "vietnamese,Austroasiatic>Vietic>Viet-Muong\n";

const char kDemoScoresCsv[] =
    "country,year,reading,listening,speaking,writing,total\n"
    "Germany,2019,24,26,25,24,98\n"
    "Hungary,2019,23,24,23,22,92\n"
    "Saudi Arabia,2019,16,20,21,18,74\n"
    "Turkey,2019,20,21,20,20,80\n"
    "Ukraine,2019,20,22,22,21,86\n";

const char kDemoCountryLanguageCsv[] =
    "country,language_code\n"
    "Germany,german\n"
    "Hungary,hungarian\n"
    "Saudi Arabia,arabic\n"
    "Turkey,turkish\n"
    "Ukraine,ukrainian\n";

const char kDemoManifest[] =
    "# Demo analysis manifest: five countries, one score year, bundled distances.\n"
    "scores.2019 = demo_scores_2019.csv\n"
    "country_map = demo_country_language.csv\n"
    "distances = bundled\n"
    "cutline.embedding = 0.19\n"
    "cutline.asjp = 0.83\n"
    "cutline.tree = 0.83\n";

const char kDemoEmbeddingEnglish[] =
    "6 4\n"
    "one 0.92 0.11 0.05 0.21\n"
    "two 0.84 0.23 0.12 0.08\n"
    "three 0.77 0.35 0.09 0.14\n"
    "dog 0.12 0.88 0.32 0.05\n"
    "cat 0.09 0.81 0.41 0.11\n"
    "night 0.05 0.13 0.22 0.91\n";

const char kDemoEmbeddingGerman[] =
    "6 4\n"
    "eins 0.9 0.14 0.06 0.19\n"
    "zwei 0.82 0.26 0.1 0.09\n"
    "drei 0.74 0.38 0.11 0.12\n"
    "hund 0.15 0.85 0.35 0.07\n"
    "katze 0.08 0.78 0.45 0.13\n"
    "nacht 0.07 0.11 0.25 0.89\n";

const char kDemoLexiconGermanEnglish[] =
    "# German-English demo dictionary (tab separated)\n"
    "eins\tone\n"
    "zwei\ttwo\n"
    "drei\tthree\n"
    "hund\tdog\n"
    "katze\tcat\n"
    "nacht\tnight\n";

const char kDemoWordlistEnglish[] =
    "concept_id,form\n"
    "1,Ei\n"
    "2,yu\n"
    "3,wi\n"
    "11,wan\n"
    "12,tu\n"
    "18,p3rsn\n"
    "21,dag\n"
    "28,bl3d\n"
    "31,ir\n"
    "34,tu8\n"
    "35,t3N\n"
    "40,nEit\n";

const char kDemoWordlistGerman[] =
    "concept_id,form\n"
    "1,iX\n"
    "2,du\n"
    "3,vir\n"
    "11,Eins\n"
    "12,cvEi\n"
    "18,pErzon\n"
    "21,hunt\n"
    "28,blut\n"
    "31,or\n"
    "34,can\n"
    "35,cuNe\n"
    "40,naXt\n";

DistanceSet load_table1() {
  DistanceSet parsed = io::parse_distances_string(kTable1Csv, "<bundled table1>");
  // Re-flag the Serbian asjp cell: 0.00 against English is implausible for
  // a non-English language, but the source prints it, so it stays Present
  // and auditable instead of silently dropped.
  std::vector<LanguageDistances> list = parsed.languages();
  for (LanguageDistances& l : list) {
    if (l.language.code == "serbian" && !l.asjp.is_missing()) {
      l.asjp = DistanceRecord::present(l.language, Method::Asjp, l.asjp.value(),
                                       RecordFlag::Suspect);
    }
  }
  return DistanceSet(std::move(list));
}

}  // namespace

const std::string& table1_csv() {
  static const std::string text = kTable1Csv;
  return text;
}

const DistanceSet& table1() {
  static const DistanceSet set = load_table1();
  return set;
}

const std::set<std::string>& known_families() {
  static const std::set<std::string> families = [] {
    std::set<std::string> out;
    for (const LanguageDistances& l : table1().languages()) out.insert(l.language.family);
    return out;
  }();
  return families;
}

const std::string& tree_classifications_csv() {
  static const std::string text = kTreeClassificationsCsv;
  return text;
}

const std::vector<tree::Classification>& tree_classifications() {
  static const std::vector<tree::Classification> list =
      io::parse_classifications_string(kTreeClassificationsCsv, "<bundled tree>");
  return list;
}

const CefrBands& cefr_bands() {
  // Cut scores per skill, C2 down to A2; absent entries are not applicable.
  static const CefrBands bands = CefrBands::make(
      /*total=*/{114.0, 95.0, 72.0, 42.0, std::nullopt},
      /*reading=*/{29.0, 24.0, 18.0, 4.0, std::nullopt},
      /*listening=*/{28.0, 22.0, 17.0, 9.0, std::nullopt},
      /*speaking=*/{28.0, 25.0, 20.0, 16.0, 10.0},
      /*writing=*/{29.0, 24.0, 17.0, 13.0, 7.0});
  return bands;
}

const std::string& demo_scores_csv() {
  static const std::string text = kDemoScoresCsv;
  return text;
}

const std::string& demo_country_language_csv() {
  static const std::string text = kDemoCountryLanguageCsv;
  return text;
}

const std::string& demo_manifest() {
  static const std::string text = kDemoManifest;
  return text;
}

const std::string& demo_embedding_english() {
  static const std::string text = kDemoEmbeddingEnglish;
  return text;
}

const std::string& demo_embedding_german() {
  static const std::string text = kDemoEmbeddingGerman;
  return text;
}

const std::string& demo_lexicon_german_english() {
  static const std::string text = kDemoLexiconGermanEnglish;
  return text;
}

const std::string& demo_wordlist_english() {
  static const std::string text = kDemoWordlistEnglish;
  return text;
}

const std::string& demo_wordlist_german() {
  static const std::string text = kDemoWordlistGerman;
  return text;
}

std::vector<std::string> export_all(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory '" + dir + "': " + ec.message());

  const std::vector<std::pair<std::string, const std::string*>> assets = {
      {"table1.csv", &table1_csv()},
      {"tree_classifications.csv", &tree_classifications_csv()},
      {"demo_scores_2019.csv", &demo_scores_csv()},
      {"demo_country_language.csv", &demo_country_language_csv()},
      {"demo_analysis.manifest", &demo_manifest()},
      {"demo_embeddings_english.vec", &demo_embedding_english()},
      {"demo_embeddings_german.vec", &demo_embedding_german()},
      {"demo_lexicon_german_english.tsv", &demo_lexicon_german_english()},
      // word-list file stems double as the language codes
      {"demo_wordlists/english.csv", &demo_wordlist_english()},
      {"demo_wordlists/german.csv", &demo_wordlist_german()},
  };
  std::vector<std::string> written;
  for (const auto& [name, text] : assets) {
    const fs::path target = fs::path(dir) / name;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw Error("cannot create directory for '" + target.string() + "'");
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + target.string() + "'");
    out << *text;
    written.push_back(name);
  }
  return written;
}

}  // namespace langdist::bundled

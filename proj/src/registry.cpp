#include "gelp/catalog.hpp"

namespace gelp {

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const char* c : {"31:1,15", "31:1,5", "45:1,21", "51:1,9", "51:0,1,5"}) out.push_back({c, 2, "t2-exceptional"});
    for (const char* c : {"15:1,3,5", "21:1,3,5", "21:1,3,7,9", "21:0,1,3,7", "23:1", "31:1,3,5", "31:0,1,7,15",
                          "35:1,3,5", "35:1,5,7", "45:1,3,5", "45:1,5,9,15", "49:1,3", "51:1,3,9", "55:0,1"})
      out.push_back({c, 3, "t3-list"});
    for (const char* c : {"9:0,1",     "15:1,3",    "15:0,1,7",   "17:1",     "17:0,1",    "21:0,1,5",
                          "21:1,3",    "25:1",      "27:1,9",     "27:0,1",   "31:0,1,15", "31:1,3",
                          "31:1,5,15", "33:0,1",    "35:1,3",     "35:1,5",   "43:1",      "45:0,1,7",
                          "45:1,3",    "45:1,7,15", "45:1,9",     "45:1,9,15", "51:1,3",   "51:1,9,17",
                          "51:0,1,19", "51:0,1,5,11", "55:1",     "55:1,3"})
      out.push_back({c, 2, "t2-list"});
    return out;
  }();
  return entries;
}

const std::vector<std::pair<std::string, std::string>>& catalog_skipped() {
  static const std::vector<std::pair<std::string, std::string>> skipped{
      {"15:1,21,31", "defining-set indices exceed the length"}};
  return skipped;
}

}  // namespace gelp

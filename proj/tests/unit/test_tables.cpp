#include <doctest.h>

#include "constamax/tables.hpp"

using namespace constamax;

TEST_CASE("row counts") {
  CHECK(table_spec(1).size() == 24);
  CHECK(table_spec(2).size() == 21);
  CHECK(table_spec(3).size() == 18);
  CHECK_THROWS_AS(table_spec(4), PreconditionError);
}

TEST_CASE("every row resolves to an in-range index") {
  for (int w : {1, 2, 3})
    for (const auto& spec : table_spec(w)) {
      INFO(spec.family << " q=" << spec.q);
      if (w == 1) CHECK(spec.printed.size() == 5);
      else CHECK(spec.printed.size() == 4);
    }
}

TEST_CASE("single rows regenerate") {
  auto t1 = table_spec(1);
  auto row = regenerate_row(t1.front());
  CHECK(row.pass);
  CHECK(row.i == 2);
  CHECK(row.printed == "(10, 7, 2; 1, 6)_9");
  CHECK(row.regenerated == "(10, 7, 2; 1, 6)_9");

  auto t2 = table_spec(2);
  auto q = regenerate_row(t2.front());
  CHECK(q.pass);
  CHECK(q.i == 0);
  CHECK(q.j == 3);
  CHECK(q.regenerated == "[[10, 6, 4/2]]_9");
}

TEST_CASE("csv and text outputs") {
  TableReport rep;
  rep.which = 2;
  rep.rows.push_back(regenerate_row(table_spec(2).front()));
  const auto csv = table_csv(rep);
  CHECK(csv.rfind("block,family,q,r,i,j,printed,regenerated,n,k,dx,dz,purity,mds,status,note\n", 0) == 0);
  CHECK(csv.find(",pass,") != std::string::npos);
  const auto j = table_json(rep);
  CHECK(j["row_count"] == 1);
  CHECK(j["all_pass"] == true);
  CHECK(!table_text(rep).empty());
}

// SPDX-License-Identifier: Apache-2.0
//
// fr3mb - multi-band MIMO resource allocation for the upper mid-band
// Copyright (C) 2026 The fr3mb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "commands.hpp"
#include "manifest.hpp"

#include "fr3mb/channel_io.hpp"
#include "fr3mb/se_table_csv.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace fr3mb
{
    namespace
    {
        struct Outcome
        {
            int status;
            std::string out;
            std::string err;
        };

        Outcome run(std::vector<std::string> args)
        {
            args.insert(args.begin(), "fr3mb");
            std::ostringstream out, err;
            int status = cli::run(args, out, err);
            return {status, out.str(), err.str()};
        }

        class CliTest : public ::testing::Test
        {
        protected:
            void SetUp() override
            {
                dir_ = fr3mb::testing::scratch_dir(::testing::UnitTest::GetInstance()->current_test_info()->name());
            }
            void TearDown() override { std::filesystem::remove_all(dir_); }

            std::string path(const std::string &name) const { return (dir_ / name).string(); }

            void write(const std::string &name, const std::string &text) const
            {
                std::ofstream(path(name)) << text;
            }

        private:
            std::filesystem::path dir_;
        };
    }

    TEST_F(CliTest, GenChannelsIsByteIdenticalAcrossRunsAndThreads)
    {
        ASSERT_EQ(run({"gen-channels", "--preset", "indoor", "--seed", "7", "--out", path("a.txt")}).status, 0);
        ASSERT_EQ(run({"gen-channels", "--preset", "indoor", "--seed", "7", "--threads", "4", "--out", path("b.txt")}).status, 0);
        auto a = fr3mb::testing::read_file(path("a.txt"));
        EXPECT_FALSE(a.empty());
        EXPECT_EQ(a, fr3mb::testing::read_file(path("b.txt")));
        EXPECT_EQ(ingest_channels_file(path("a.txt")).size(), 500u);

        auto m1 = nlohmann::json::parse(fr3mb::testing::read_file(path("a.txt.manifest.json")));
        auto m2 = nlohmann::json::parse(fr3mb::testing::read_file(path("b.txt.manifest.json")));
        EXPECT_EQ(m1["command"], "gen-channels");
        EXPECT_EQ(m1["seed"], 7);
        EXPECT_EQ(m1["config_digest"].get<std::string>().size(), 64u);
        EXPECT_EQ(m1["config_digest"], m2["config_digest"]);
    }

    TEST_F(CliTest, GenChannelsFromConfig)
    {
        write("cfg.json", R"({"kind": "outdoor", "num_users": 3, "frequencies": [7, 24], "rx_antennas": 2})");
        auto r = run({"gen-channels", "--config", path("cfg.json"), "--out", path("c.txt")});
        ASSERT_EQ(r.status, 0) << r.err;
        auto set = ingest_channels_file(path("c.txt"));
        EXPECT_EQ(set.size(), 6u);
        EXPECT_EQ(set.records()[0].matrix.rows(), 2);
        EXPECT_EQ(set.records()[0].matrix.cols(), 9);
    }

    TEST_F(CliTest, InvalidConfigNamesTheField)
    {
        write("bad.json", R"({"kind": "indoor", "cluster_count": 0})");
        auto r = run({"gen-channels", "--config", path("bad.json"), "--out", path("x.txt")});
        EXPECT_NE(r.status, 0);
        EXPECT_NE(r.err.find("cluster_count"), std::string::npos) << r.err;
        EXPECT_FALSE(std::filesystem::exists(path("x.txt")));

        write("unknown.json", R"({"kind": "indoor", "clusters": 3})");
        r = run({"gen-channels", "--config", path("unknown.json"), "--out", path("y.txt")});
        EXPECT_NE(r.status, 0);
        EXPECT_NE(r.err.find("clusters"), std::string::npos) << r.err;
    }

    TEST_F(CliTest, UsageErrors)
    {
        EXPECT_EQ(run({}).status, 2);
        EXPECT_EQ(run({"optimize", "--builtin", "indoor"}).status, 2); // missing --budget
        EXPECT_EQ(run({"frobnicate"}).status, 2);
        EXPECT_EQ(run({"optimize", "--builtin", "attic", "--budget", "9"}).status, 1);
        EXPECT_EQ(run({"optimize", "--builtin", "indoor", "--budget", "9", "--only", "8"}).status, 1);
    }

    TEST_F(CliTest, BuildTableSiso)
    {
        write("siso.txt", "#channels v1 rx=1 tx=1\nuser=0 f_ghz=7\n1+0i\nuser=1 f_ghz=7\n0+2i\n"
                          "user=0 f_ghz=24\n0.5+0i\nuser=1 f_ghz=24\n0-0.5i\n");
        auto r = run({"build-table", "--channels", path("siso.txt"), "--snr-db", "0", "--ladder", "linear:1", "--out",
                      path("t.csv")});
        ASSERT_EQ(r.status, 0) << r.err;
        auto table = load_se_table(path("t.csv"));
        // mean of log2(1 + |h|^2): (1 + log2 5) / 2 and log2(1.25)
        EXPECT_NEAR(table.se(1, 0), (1.0 + std::log2(5.0)) / 2.0, 1e-12);
        EXPECT_NEAR(table.se(1, 1), std::log2(1.25), 1e-12);
        EXPECT_TRUE(std::filesystem::exists(path("t.csv.manifest.json")));
    }

    TEST_F(CliTest, BuildTableShortfallFails)
    {
        write("siso.txt", "#channels v1 rx=1 tx=1\nuser=0 f_ghz=7\n1+0i\n");
        auto r = run({"build-table", "--channels", path("siso.txt"), "--ladder", "linear:2", "--out", path("t.csv")});
        EXPECT_EQ(r.status, 1);
        EXPECT_NE(r.err.find("2x2"), std::string::npos) << r.err;
    }

    TEST_F(CliTest, OptimizeBuiltinTables)
    {
        auto r = run({"optimize", "--builtin", "indoor", "--budget", "9"});
        ASSERT_EQ(r.status, 0) << r.err;
        auto j = nlohmann::json::parse(r.out);
        EXPECT_NEAR(j["sum_se"].get<double>(), 44.401, 1e-9);
        EXPECT_EQ(j["choice"]["7"], "4x4");
        EXPECT_EQ(j["choice"]["24"], "1x1");

        r = run({"optimize", "--builtin", "indoor", "--budget", "9", "--only", "7,24", "--out", path("o.json")});
        ASSERT_EQ(r.status, 0) << r.err;
        j = nlohmann::json::parse(fr3mb::testing::read_file(path("o.json")));
        EXPECT_NEAR(j["sum_se"].get<double>(), 33.127, 1e-9);
        EXPECT_EQ(j["choice"]["7"], "5x5");
        EXPECT_EQ(j["choice"]["24"], "4x4");
        EXPECT_EQ(j["mask"]["10"], false);

        r = run({"optimize", "--builtin", "outdoor", "--budget", "9", "--exclude", "24"});
        ASSERT_EQ(r.status, 0) << r.err;
        EXPECT_EQ(nlohmann::json::parse(r.out)["choice"]["24"], "0");
    }

    TEST_F(CliTest, OptimizeTableFileMatchesBuiltin)
    {
        ASSERT_EQ(run({"export-builtin", "--builtin", "outdoor", "--out", path("out.csv")}).status, 0);
        auto a = run({"optimize", "--table", path("out.csv"), "--budget", "9"});
        auto b = run({"optimize", "--builtin", "outdoor", "--budget", "9"});
        ASSERT_EQ(a.status, 0) << a.err;
        EXPECT_EQ(nlohmann::json::parse(a.out)["sum_se"], nlohmann::json::parse(b.out)["sum_se"]);
        EXPECT_EQ(load_se_table(path("out.csv")), builtin_reference_tables().outdoor);
    }

    TEST_F(CliTest, SweepCsv)
    {
        auto r = run({"sweep", "--builtin", "indoor", "--budgets", "0:12:3"});
        ASSERT_EQ(r.status, 0) << r.err;
        std::istringstream lines(r.out);
        std::string header, row;
        std::getline(lines, header);
        EXPECT_EQ(header, "budget,7_se,10_se,14_se,20_se,24_se,sum_se");
        std::vector<std::string> rows;
        while (std::getline(lines, row))
            rows.push_back(row);
        ASSERT_EQ(rows.size(), 5u);
        EXPECT_EQ(rows[0], "0,0.000,0.000,0.000,0.000,0.000,0.000");
        EXPECT_EQ(rows[3], "9,15.617,9.286,6.527,6.520,6.451,44.401");
    }

    TEST_F(CliTest, CompareWritesBothCsvsAndManifest)
    {
        auto r = run({"compare", "--builtin", "indoor", "--out", path("cmp.csv")});
        ASSERT_EQ(r.status, 0) << r.err;
        auto raw = fr3mb::testing::read_file(path("cmp.csv"));
        auto radar = fr3mb::testing::read_file(path("cmp.csv.radar.csv"));
        EXPECT_NE(raw.find("frequency-partitioned,0.5,28.083,196,1,980"), std::string::npos) << raw;
        EXPECT_NE(raw.find("frequency-integrated,1,53.713,180,2,180"), std::string::npos) << raw;
        EXPECT_NE(radar.find("all-antennas,5.000000,5.000000,5.000000,5.000000,5.000000"), std::string::npos) << radar;
        auto manifest = nlohmann::json::parse(fr3mb::testing::read_file(path("cmp.csv.manifest.json")));
        EXPECT_EQ(manifest["outputs"].size(), 2u);
        EXPECT_TRUE(manifest.contains("notes"));
    }

    TEST_F(CliTest, ManifestDigestTracksInputs)
    {
        write("t.csv", "cost,7\n1,1.000\n");
        ASSERT_EQ(run({"optimize", "--table", path("t.csv"), "--budget", "1", "--out", path("r1.json")}).status, 0);
        ASSERT_EQ(run({"optimize", "--table", path("t.csv"), "--budget", "1", "--out", path("r2.json")}).status, 0);
        write("t.csv", "cost,7\n1,2.000\n");
        ASSERT_EQ(run({"optimize", "--table", path("t.csv"), "--budget", "1", "--out", path("r3.json")}).status, 0);

        auto digest = [&](const std::string &name)
        {
            return nlohmann::json::parse(fr3mb::testing::read_file(path(name + ".manifest.json")))["config_digest"];
        };
        EXPECT_EQ(digest("r1.json"), digest("r2.json"));
        EXPECT_NE(digest("r1.json"), digest("r3.json"));
    }

    TEST(CliHelpers, ParseLadderAndBudgets)
    {
        EXPECT_EQ(cli::parse_ladder("square:14"), SizeLadder::square(14));
        EXPECT_EQ(cli::parse_ladder("linear:9"), SizeLadder::linear(9));
        EXPECT_THROW(cli::parse_ladder("cubic:3"), std::invalid_argument);
        EXPECT_EQ(cli::parse_budget_range("2:8:3"), (std::vector<int>{2, 5, 8}));
        EXPECT_EQ(cli::parse_budget_range("4:4"), (std::vector<int>{4}));
        EXPECT_THROW(cli::parse_budget_range("5:1"), std::invalid_argument);
    }

    TEST(CliHelpers, Sha256KnownAnswer)
    {
        EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}

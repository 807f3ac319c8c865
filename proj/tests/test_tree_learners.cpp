#include <doctest.h>

#include "treekit/data.hpp"
#include "treekit/learn.hpp"
#include "treekit/tree.hpp"

#include <cmath>
#include <functional>

using namespace treekit;

namespace {

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// correct and unclassified counts when a tree rescores its own training data
std::pair<int, int> resubstitution(const TreeNode& tree, const Dataset& data) {
    int correct = 0, unclassified = 0;
    for (const Instance& inst : data.instances) {
        const Prediction p = classify(tree, data.schema, inst);
        if (!p.classified())
            ++unclassified;
        else if (*p.label == inst.values[data.schema.class_index].nominal_index())
            ++correct;
    }
    return {correct, unclassified};
}

Dataset numeric_pair() {
    Dataset data;
    data.schema.relation = "tiny";
    data.schema.attributes = {{"X", AttributeKind::Numeric, {}},
                              {"Y", AttributeKind::Nominal, {"A", "B"}}};
    data.schema.class_index = 1;
    for (double x : {1.0, 2.0})
        data.instances.push_back({{Value::numeric(x), Value::nominal(0)}});
    for (double x : {3.0, 4.0})
        data.instances.push_back({{Value::numeric(x), Value::nominal(1)}});
    return data;
}

void assert_strictly_binary(const TreeNode& node) {
    if (node.is_leaf()) return;
    CHECK((node.kind == NodeKind::SubsetSplit || node.kind == NodeKind::ThresholdSplit));
    REQUIRE(node.children.size() == 2);
    for (const auto& child : node.children) assert_strictly_binary(*child);
}

} // namespace

TEST_CASE("fully grown trees memorize the embedded dataset") {
    const Dataset data = load_embedded_students();

    const TreePtr id3 = build_id3(data);
    CHECK(id3->kind == NodeKind::MultiwaySplit);
    CHECK(data.schema.attributes[id3->attribute].name == "ATT");
    CHECK(node_count(*id3) == 55);
    CHECK(leaf_count(*id3) == 37);
    CHECK(resubstitution(*id3, data) == std::pair<int, int>{48, 0});

    const TreePtr c45 = build_c45(data);
    CHECK(c45->kind == NodeKind::MultiwaySplit);
    CHECK(data.schema.attributes[c45->attribute].name == "ATT");
    CHECK(node_count(*c45) == 69);
    CHECK(leaf_count(*c45) == 47);
    CHECK(resubstitution(*c45, data) == std::pair<int, int>{48, 0});

    const TreePtr cart = build_cart(data);
    CHECK(node_count(*cart) == 33);
    CHECK(leaf_count(*cart) == 17);
    CHECK(resubstitution(*cart, data) == std::pair<int, int>{44, 0});
    assert_strictly_binary(*cart);

    LearnerParams fine;
    fine.min_leaf = 1;
    const TreePtr cart1 = build_cart(data, fine);
    CHECK(node_count(*cart1) == 45);
    CHECK(leaf_count(*cart1) == 23);
    CHECK(resubstitution(*cart1, data) == std::pair<int, int>{48, 0});
}

TEST_CASE("the grown trees pass structural validation") {
    const Dataset data = load_embedded_students();
    for (Algorithm a : {Algorithm::Id3, Algorithm::C45, Algorithm::Cart})
        CHECK_NOTHROW(check_tree(*build_tree(a, data), data.schema));
}

TEST_CASE("multiway trees grow one branch per declared value, empty ones included") {
    const Dataset data = load_embedded_students();
    const TreePtr id3 = build_id3(data);
    // the root splits on a three-valued attribute
    REQUIRE(id3->children.size() == 3);

    // somewhere in the tree a declared value received no training instances
    std::size_t empties = 0;
    const std::function<void(const TreeNode&)> walk = [&](const TreeNode& n) {
        if (n.kind == NodeKind::EmptyLeaf) ++empties;
        for (const auto& c : n.children) walk(*c);
    };
    walk(*id3);
    CHECK(empties > 0);
}

TEST_CASE("learners reject unusable training data") {
    Dataset empty = load_embedded_students();
    empty.instances.clear();
    CHECK_THROWS_AS((void)build_id3(empty), DomainError);
    CHECK_THROWS_AS((void)build_cart(empty), DomainError);

    Dataset with_missing = load_embedded_students();
    with_missing.instances[10].values[2] = Value::missing();
    CHECK_THROWS_AS((void)build_id3(with_missing), UnsupportedMissingError);
    CHECK_THROWS_AS((void)build_c45(with_missing), UnsupportedMissingError);
    CHECK_THROWS_AS((void)build_cart(with_missing), UnsupportedMissingError);

    const Dataset numeric = numeric_pair();
    CHECK_THROWS_AS((void)build_id3(numeric), UnsupportedAttributeError);
}

TEST_CASE("numeric attributes split on thresholds at observed values") {
    const Dataset data = numeric_pair();
    std::vector<TreePtr> trees;
    trees.push_back(build_c45(data));
    trees.push_back(build_cart(data));
    for (const TreePtr& tree : trees) {
        REQUIRE(tree->kind == NodeKind::ThresholdSplit);
        CHECK(tree->attribute == 0);
        CHECK(tree->threshold == 2.0); // x <= 2 goes left
        REQUIRE(tree->children.size() == 2);
        CHECK(tree->children[0]->label == 0);
        CHECK(tree->children[1]->label == 1);
    }

    // routing: boundary value goes left, anything above goes right
    const TreePtr tree = build_cart(data);
    Instance at{{Value::numeric(2.0), Value::missing()}};
    Instance above{{Value::numeric(2.0000001), Value::missing()}};
    CHECK(*classify(*tree, data.schema, at).label == 0);
    CHECK(*classify(*tree, data.schema, above).label == 1);
}

TEST_CASE("classification yields normalized distributions or an unclassified marker") {
    const Dataset data = load_embedded_students();
    const TreePtr id3 = build_id3(data);

    const Prediction p = classify(*id3, data.schema, data.instances.front());
    REQUIRE(p.classified());
    CHECK(*p.label == 0);
    double total = 0;
    for (double x : p.distribution) total += x;
    CHECK(near(total, 1.0));

    // an instance combination that reaches an empty branch is unclassified
    bool found_unclassified = false;
    const auto& schema = data.schema;
    std::vector<int> sizes;
    for (std::size_t a = 0; a + 1 < schema.attributes.size(); ++a)
        sizes.push_back(static_cast<int>(schema.attributes[a].values.size()));
    std::vector<int> combo(sizes.size(), 0);
    while (true) {
        Instance inst;
        for (std::size_t a = 0; a < combo.size(); ++a)
            inst.values.push_back(Value::nominal(combo[a]));
        inst.values.push_back(Value::missing());
        if (!classify(*id3, schema, inst).classified()) {
            found_unclassified = true;
            break;
        }
        std::size_t a = 0;
        while (a < combo.size() && ++combo[a] == sizes[a]) combo[a++] = 0;
        if (a == combo.size()) break;
    }
    CHECK(found_unclassified);

    Instance missing = data.instances.front();
    missing.values[id3->attribute] = Value::missing();
    CHECK_THROWS_AS((void)classify(*id3, schema, missing), UnsupportedMissingError);
}

TEST_CASE("binomial upper-bound error estimate") {
    CHECK(near(pessimistic_error_bound(14, 2, 0.25), 3.65707015598, 1e-8));
    CHECK(near(pessimistic_error_bound(8, 1, 0.25), 2.42159786859, 1e-8));
    CHECK(near(pessimistic_error_bound(6, 1, 0.25), 2.33687691120, 1e-8));
    // zero observed errors: n * (1 - cf^(1/n))
    CHECK(near(pessimistic_error_bound(6, 0, 0.25), 6.0 * (1.0 - std::pow(0.25, 1.0 / 6.0)),
               1e-8));
    CHECK(pessimistic_error_bound(0, 0, 0.25) == 0.0);
    CHECK(pessimistic_error_bound(5, 5, 0.25) == 5.0);
    CHECK(pessimistic_error_bound(5, 9, 0.25) == 5.0);
    CHECK_THROWS_AS((void)pessimistic_error_bound(-1, 0, 0.25), DomainError);
    CHECK_THROWS_AS((void)pessimistic_error_bound(5, -1, 0.25), DomainError);
    CHECK_THROWS_AS((void)pessimistic_error_bound(5, 1, 0.0), DomainError);
    CHECK_THROWS_AS((void)pessimistic_error_bound(5, 1, 1.0), DomainError);
}

TEST_CASE("pessimistic pruning shrinks the grown tree and keeps it valid") {
    const Dataset data = load_embedded_students();
    const TreePtr grown = build_c45(data);
    const TreePtr pruned = prune_pessimistic(*grown, data, 0.25);
    CHECK(node_count(*pruned) == 47);
    CHECK(leaf_count(*pruned) == 32);
    CHECK(resubstitution(*pruned, data) == std::pair<int, int>{44, 0});
    CHECK_NOTHROW(check_tree(*pruned, data.schema));

    LearnerParams on;
    on.pruning = true;
    const TreePtr via_params = build_c45(data, on);
    CHECK(structurally_equal(*via_params, *pruned));

    // id3 never prunes, whatever the flag says
    LearnerParams id3_on;
    id3_on.pruning = true;
    CHECK(structurally_equal(*build_id3(data, id3_on), *build_id3(data)));
}

TEST_CASE("weakest-link alpha sequence of the grown binary tree") {
    const Dataset data = load_embedded_students();
    const TreePtr cart = build_cart(data);
    const std::vector<double> alphas = weakest_link_alphas(*cart, data);
    REQUIRE(alphas.size() == 7);
    const double expected[] = {0.0, 0.5, 1.0, 2.0, 4.0, 6.0, 7.0};
    for (std::size_t i = 0; i < alphas.size(); ++i) CHECK(near(alphas[i], expected[i]));
}

TEST_CASE("alpha pruning: zero keeps the full tree, infinity collapses it") {
    const Dataset data = load_embedded_students();
    const TreePtr cart = build_cart(data);
    CHECK(structurally_equal(*prune_to_alpha(*cart, data, 0.0), *cart));

    const TreePtr stump = prune_to_alpha(*cart, data, 1e9);
    CHECK(stump->is_leaf());
    CHECK(stump->label == 0); // majority class of the whole data
}

TEST_CASE("cost-complexity pruned tree on the full embedded dataset") {
    const Dataset data = load_embedded_students();
    LearnerParams on;
    on.pruning = true;
    const TreePtr tree = build_cart(data, on);

    CHECK(node_count(*tree) == 7);
    CHECK(leaf_count(*tree) == 4);
    assert_strictly_binary(*tree);

    // root: PSM in {First} -> leaf 'First' [8,1,1,0]
    REQUIRE(tree->kind == NodeKind::SubsetSplit);
    CHECK(data.schema.attributes[tree->attribute].name == "PSM");
    CHECK(tree->subset == std::vector<int>{0});
    const TreeNode& first_leaf = *tree->children[0];
    REQUIRE(first_leaf.kind == NodeKind::Leaf);
    CHECK(first_leaf.label == 0);
    CHECK(first_leaf.distribution == std::vector<long long>{8, 1, 1, 0});

    // right: ASS in {Yes} -> leaf 'Second' [6,11,4,1]
    const TreeNode& right = *tree->children[1];
    REQUIRE(right.kind == NodeKind::SubsetSplit);
    CHECK(data.schema.attributes[right.attribute].name == "ASS");
    CHECK(right.children[0]->label == 1);
    CHECK(right.children[0]->distribution == std::vector<long long>{6, 11, 4, 1});

    // right-right: ATT in {Poor} -> 'Fail' [0,0,2,6], else 'Third' [0,2,6,0]
    const TreeNode& deeper = *right.children[1];
    REQUIRE(deeper.kind == NodeKind::SubsetSplit);
    CHECK(data.schema.attributes[deeper.attribute].name == "ATT");
    CHECK(deeper.children[0]->label == 3);
    CHECK(deeper.children[0]->distribution == std::vector<long long>{0, 0, 2, 6});
    CHECK(deeper.children[1]->label == 2);
    CHECK(deeper.children[1]->distribution == std::vector<long long>{0, 2, 6, 0});
}

TEST_CASE("trees serialize to JSON and back without structural loss") {
    const Dataset data = load_embedded_students();
    for (Algorithm a : {Algorithm::Id3, Algorithm::C45, Algorithm::Cart}) {
        for (bool pruning : {false, true}) {
            LearnerParams params;
            params.pruning = pruning;
            const TreePtr tree = build_tree(a, data, params);
            const TreePtr back = tree_from_json(tree_to_json(*tree, data.schema), data.schema);
            CHECK(structurally_equal(*tree, *back));
        }
    }
}

TEST_CASE("algorithm names round-trip") {
    CHECK(to_string(Algorithm::Id3) == std::string("id3"));
    CHECK(to_string(Algorithm::C45) == std::string("c45"));
    CHECK(to_string(Algorithm::Cart) == std::string("cart"));
    CHECK(algorithm_from_string("id3") == Algorithm::Id3);
    CHECK(algorithm_from_string("c45") == Algorithm::C45);
    CHECK(algorithm_from_string("cart") == Algorithm::Cart);
    CHECK_FALSE(algorithm_from_string("c4.5").has_value());
}

"""Show the cover algebra: validation, child swaps, induced subtrees, embeddings."""

from sweepcover import (
    canonical_blocks,
    canonical_code,
    embedding_tree,
    induced_subgraphs,
    make_cover,
    parse_tree,
    serialize_tree,
    swap_children,
    validate,
)


def show(cover):
    return [list(b) for b in canonical_blocks(cover)]


def main():
    tree = parse_tree("r a\nr b\na c\na d\nb e")

    cover = make_cover([["r"]])
    print("start from the root cover:", show(cover))

    cover = swap_children(tree, cover, "r", [["a"], ["b"]])
    print("swap root for its children:", show(cover))

    cover = swap_children(tree, cover, "a", [["c", "d"]])
    print("swap a for its child set:  ", show(cover))
    print("still valid:", validate(tree, cover).valid)

    bad = make_cover([["r"], ["e"]])
    report = validate(tree, bad)
    print(f"\n{show(bad)} -> violations {list(report.violations)}, witness {report.witness}")

    print("\ninduced subtrees (block + ancestors + descendants):")
    for block, sub in zip(canonical_blocks(cover), induced_subgraphs(tree, cover)):
        print(f"  block {list(block)}:")
        for line in serialize_tree(sub).splitlines():
            print("   ", line)

    blocks = canonical_blocks(cover)
    e1 = embedding_tree(tree, cover, {i: b[0] for i, b in enumerate(blocks)})
    e2 = embedding_tree(tree, cover, {i: b[-1] for i, b in enumerate(blocks)})
    print("\nembedding trees from two selections share a canonical code:")
    print(" ", canonical_code(e1), "==", canonical_code(e2))


if __name__ == "__main__":
    main()

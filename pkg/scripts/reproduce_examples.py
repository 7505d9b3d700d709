"""Print the sorted-suffix tables for "mathematics" and for the second
iteration on the three-factor example text."""
from lyndonbwt import MergedTransform, RankDict, compute_a, compute_g, duval_factorize
from lyndonbwt import merge_transforms, sort_block
from lyndonbwt.pipeline import bwt_lynd
from lyndonbwt.text import render

EXAMPLE = b"aabcabbaabaabdabbaaabbdc"


def suffix(text, p, end):
    return text[p - 1:end].decode() + "$"


def table(title, text, sa, bwt, end, extra=None):
    print(title)
    head = ("G", "SA", "bwt", "suffix") if extra else ("SA", "bwt", "suffix")
    print("  ".join(f"{h:>4}" for h in head[:-1]), " ", head[-1])
    for r, p in enumerate(sa):
        cols = ([extra[r]] if extra else []) + [p, render(bwt[r:r + 1])]
        print("  ".join(f"{c:>4}" for c in cols), " ", suffix(text, p, end))
    print()


def main():
    t = bwt_lynd(b"mathematics")
    table("mathematics$", b"mathematics", t.sa, t.bwt, 11)

    f = duval_factorize(EXAMPLE)
    print("factors:", " | ".join(w.decode() for w in f.words(EXAMPLE)), "\n")
    l1 = sort_block(EXAMPLE, f[0])
    table("L1$", EXAMPLE, l1.sa, l1.bwt, f[0].end)
    prev = MergedTransform.from_block(l1)
    l2 = sort_block(EXAMPLE, f[1])
    g = compute_g(compute_a(RankDict(prev.bwt), EXAMPLE, l2.span), l2)
    table("L2$", EXAMPLE, l2.sa, l2.bwt, f[1].end, extra=g)
    merged = merge_transforms(prev, l2, g)
    table("L1L2$", EXAMPLE, merged.sa, merged.bwt, f[1].end)


if __name__ == "__main__":
    main()

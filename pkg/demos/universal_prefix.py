"""Where the even-position subsum distribution stops being universal.

For each n, the row f(n, j) counts partitions of n whose even-position
parts sum to j.  Small j does not feel n at all: the row head agrees with
the pair-count sequence 1, 2, 5, 10, 20, 36, ... (pairs of partitions with
total weight j) for every n.  The agreement breaks at exactly
j = floor(n/3) + 1, and this script shows the break moving right as n
grows.
"""

from partsums import exact


def main():
    print("universal sequence (pairs of partitions by total weight):")
    seq = [exact.a000712(j) for j in range(13)]
    print("   " + "  ".join(f"{v:5d}" for v in seq))
    print()

    print("f(n, j) rows, * marks the first column that deviates:")
    print(f"{'n':>4}  row")
    for n in range(6, 31, 3):
        row = exact.f_table(n)
        cutoff = exact.theorem1_check(n)
        cells = []
        for j in range(min(len(row), 13)):
            mark = "*" if j == cutoff else " "
            cells.append(f"{mark}{row[j]:5d}")
        print(f"{n:>4}  " + " ".join(cells))
    print()

    print("first deviation against the floor(n/3) + 1 rule:")
    print(f"{'n':>4} {'measured':>9} {'predicted':>10}")
    for n in (10, 25, 50, 75, 100):
        measured = exact.theorem1_check(n)
        print(f"{n:>4} {measured:>9} {n // 3 + 1:>10}")


if __name__ == "__main__":
    main()

"""
Interactive Demo Script for Gabidulin List Decoding

This script walks through the worked GF(8) example (both minimal-basis
algorithms and the resulting list of closest codewords), a channel round trip
and a small decoder comparison.
"""

import json
import sys
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from gabidulin.codes import CodeSpec
from gabidulin.decoder import decode_chase, decode_closest, decode_exhaustive, op_counters
from gabidulin.field import field_new
from gabidulin.interpolation import EEATrace, interpolation_module, iterate_minimal_basis, minimal_basis_eea
from gabidulin.service import DecodingService
from gabidulin.specfile import CodeSpecFile

EXAMPLE_SPEC = project_root / "data" / "gf8_example.json"


def print_section(title: str):
    """Print a formatted section header."""
    print("\n" + "=" * 70)
    print(f"  {title}")
    print("=" * 70)


def print_json(data: dict, indent: int = 2):
    """Print formatted JSON data."""
    print(json.dumps(data, indent=indent, ensure_ascii=False))


def demo_worked_example():
    """Show every intermediate of the GF(8) example."""
    print_section("WORKED EXAMPLE OVER GF(8)")

    code = CodeSpecFile.load(EXAMPLE_SPEC).to_code()
    field = code.field
    received = (3, 0, 2)

    print("\nField: GF(8) = GF(2)[a]/(a^3+a+1)")
    print("Element integers: " + ", ".join(f"{a}={field.format(a)}" for a in range(1, 8)))
    print(f"Generators: {code.generators}, k = {code.k}")
    print(f"Received word: {received}")

    print("\n1. INTERPOLATION MODULE")
    print("-" * 70)
    for row in interpolation_module(field, code.generators, received, code.k):
        print(f"  [{row.f1}, {row.f2}]")

    print("\n2. EUCLIDEAN MINIMAL BASIS")
    print("-" * 70)
    trace = EEATrace()
    basis = minimal_basis_eea(field, code.generators, received, code.k, trace)
    for quo, rem in zip(trace.quotients, trace.remainders):
        print(f"  quotient {quo}, remainder {rem}")
    print(f"  b1 = [{basis.b1.f1}, {basis.b1.f2}]")
    print(f"  b2 = [{basis.b2.f1}, {basis.b2.f2}]")
    print(f"  degrees l1 = {basis.ell1}, l2 = {basis.ell2}")

    print("\n3. POINT-BY-POINT MINIMAL BASIS")
    print("-" * 70)
    for state in iterate_minimal_basis(field, code.generators, received, code.k):
        print(f"  B{state.step} ({state.branch}): "
              f"[{state.row1.f1}, {state.row1.f2}] / [{state.row2.f1}, {state.row2.f2}]")

    print("\n4. CLOSEST CODEWORDS")
    print("-" * 70)
    out = decode_closest(code, received)
    for message in out.messages:
        print(f"  m = {message}  ->  c = {code.encode(message)}")
    print(f"  {len(out.messages)} codewords at rank distance {out.t}")
    print_json(op_counters(out))


def demo_channel_round_trip():
    """Encode, corrupt and decode over GF(256)."""
    print_section("CHANNEL ROUND TRIP")

    code = CodeSpec.with_standard_generators(field_new(2, 8), 8, 2)
    message = code.random_message(seed=7)
    codeword = code.encode(message)
    error = code.random_error(3, seed=7)
    received = code.add_words(codeword, error)

    print(f"\nCode: n = {code.n}, k = {code.k} over GF(2^8); unique radius {(code.n - code.k) // 2}")
    print(f"Message coefficients: {code.message_coeffs(message)}")
    print(f"Error of rank {code.rank_weight(error)}: {error}")

    out = decode_closest(code, received)
    print(f"Decoded: {out.message_coeffs(code.k)} at distance {out.t} (j = {out.j_final})")
    print(f"Symbolic divisions in the search: {out.counters['search'].symbolic_divisions}")


def demo_decoder_comparison():
    """Compare multiplication counts beyond the unique radius."""
    print_section("DECODER COMPARISON")

    code = CodeSpec.with_standard_generators(field_new(2, 4), 4, 2)
    received = code.add_words(code.encode(code.random_message(seed=1)), code.random_error(2, seed=1))
    print(f"\nCode: n = 4, k = 2 over GF(16), received {received}")

    for name, out in (
        ("parametrization", decode_closest(code, received)),
        ("chase (radius 2)", decode_chase(code, received, 2)),
        ("exhaustive", decode_exhaustive(code, received)),
    ):
        mults = op_counters(out)["total"]["multiplications"]
        print(f"  {name:<18} {len(out.messages):>3} message(s)  {mults:>8} multiplications")


def demo_selftest():
    """Run the golden self-test."""
    print_section("SELF-TEST")
    result = DecodingService().selftest()
    for check in result["checks"]:
        print(f"  {'PASS' if check['passed'] else 'FAIL'} {check['name']}")
    print(f"\n  {'passed' if result['passed'] else 'FAILED'} in {result['elapsed_s']:.3f} s")


def main():
    """Main demo function."""
    print("\n" + "=" * 70)
    print("  GABIDULIN CODES: MINIMAL LIST DECODING")
    print("=" * 70)

    print("\nChoose demo mode:")
    print("  1. Worked GF(8) Example")
    print("  2. Channel Round Trip")
    print("  3. Decoder Comparison")
    print("  4. Self-Test")
    print("  5. All Demos (1-4)")
    print("  0. Exit")

    while True:
        try:
            choice = input("\nEnter your choice (0-5): ").strip()

            if choice == "0":
                print("\nGoodbye!")
                break
            elif choice == "1":
                demo_worked_example()
            elif choice == "2":
                demo_channel_round_trip()
            elif choice == "3":
                demo_decoder_comparison()
            elif choice == "4":
                demo_selftest()
            elif choice == "5":
                demo_worked_example()
                demo_channel_round_trip()
                demo_decoder_comparison()
                demo_selftest()
            else:
                print("Invalid choice. Please enter 0-5.")

            if choice in ["1", "2", "3", "4", "5"]:
                print("\n" + "=" * 70)
                print("  Demo completed! Choose another option or 0 to exit.")
                print("=" * 70)

        except KeyboardInterrupt:
            print("\n\nInterrupted. Goodbye!")
            break
        except Exception as e:
            print(f"\nError: {e}")
            print("Please try again.")


if __name__ == "__main__":
    main()

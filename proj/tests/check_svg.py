import subprocess
import sys
import xml.etree.ElementTree as ET

SVG = "{http://www.w3.org/2000/svg}"


def run(*args):
    return subprocess.run([sys.argv[1], *args], check=True, capture_output=True, text=True).stdout


def count(svg_text, tag, cls):
    root = ET.fromstring(svg_text.encode())
    return sum(1 for e in root.iter(SVG + tag) if e.get("class") == cls)


def main():
    failures = []
    for step in ("5", "45"):
        csv_rows = len(run("sweep", "--step", step).splitlines()) - 1
        cells = count(run("sweep", "--step", step, "--format", "svg"), "rect", "cell")
        print(f"sweep step {step}: {csv_rows} csv rows, {cells} svg cells")
        if csv_rows != cells:
            failures.append(f"sweep step {step}")

    path = ["path", "-w", "30,10", "-w", "30,160", "-w", "170,160", "-w", "170,5"]
    samples = len(run(*path).splitlines()) - 1
    circles = count(run(*path, "--format", "svg"), "circle", "sample")
    print(f"path: {samples} csv rows, {circles} svg samples")
    if samples != circles:
        failures.append("path")

    if failures:
        print("count mismatch:", ", ".join(failures))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

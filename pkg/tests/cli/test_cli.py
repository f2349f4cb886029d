"""Tests for the ``tricacti`` command line."""

from __future__ import annotations

import io
import os
import tempfile
import unittest
from contextlib import redirect_stdout
from pathlib import Path
from unittest import mock

from tests.fixtures import cactus_five, image_five
from tricacti.cli import EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main
from tricacti.schema import ImageTupleModel, PartitionedCactusModel
from tricacti.utils import dump_json, load_json


class TestCli(unittest.TestCase):
    """Subcommands end to end, with stdout captured."""

    def setUp(self: TestCli) -> None:
        """Scratch directory and an isolated environment for ``--limit``."""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        env = mock.patch.dict(os.environ, {})
        env.start()
        self.addCleanup(env.stop)

    def _run(self: TestCli, *argv: str) -> tuple[int, str]:
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code: int = main(list(argv))
        return code, buffer.getvalue()

    def _write(self: TestCli, name: str, text: str) -> str:
        path = Path(self.tmp.name) / name
        path.write_text(text, encoding="utf-8")
        return path.as_posix()

    def test_count(self: TestCli) -> None:
        """Each method prints the same class size."""
        for method in ("formula", "symmetric", "stirling", "brute"):
            code, out = self._run("count", "--p", "1,1,1", "--n", "3", "--method", method)
            self.assertEqual(first=code, second=EXIT_OK)  # noqa: PT009
            self.assertEqual(first=out, second="36\n")  # noqa: PT009
        self.assertEqual(first=self._run("count", "--p", "1,1,1", "--n", "4")[1], second="576\n")  # noqa: PT009

    def test_count_m(self: TestCli) -> None:
        """CSV table and the genus view for n = 2."""
        code, out = self._run("count-m", "--n", "2")
        self.assertEqual(first=code, second=EXIT_OK)  # noqa: PT009
        self.assertEqual(first=out, second="n1,n2,n3,count\n1,1,1,1\n1,2,2,1\n2,1,2,1\n2,2,1,1\n")  # noqa: PT009
        self.assertEqual(first=self._run("count-m", "--n", "2", "--by-genus")[1], second="genus,count\n0,3\n1,1\n")  # noqa: PT009

    def test_ct_count(self: TestCli) -> None:
        """Closed form and enumeration for a three vertex profile."""
        for extra in ((), ("--brute-force",)):
            code, out = self._run("ct-count", "--profile", "1,1,1,0,1,0", *extra)
            self.assertEqual(first=(code, out), second=(EXIT_OK, "1\n"))  # noqa: PT009

    def test_theta_both_ways(self: TestCli) -> None:
        """Forward on the five point cactus, then back."""
        cactus_doc: str = dump_json(data=PartitionedCactusModel.from_domain(cactus_five()).model_dump(mode="json"))
        source: str = self._write("cactus.json", cactus_doc)
        image_path: str = (Path(self.tmp.name) / "image.json").as_posix()
        code, _ = self._run("theta", "forward", "--input", source, "--output", image_path)
        self.assertEqual(first=code, second=EXIT_OK)  # noqa: PT009
        expected = ImageTupleModel.from_domain(image_five()).model_dump(mode="json", exclude_none=True)
        self.assertEqual(first=load_json(text=Path(image_path).read_text(encoding="utf-8")), second=expected)  # noqa: PT009

        code, out = self._run("theta", "inverse", "--input", image_path)
        self.assertEqual(first=code, second=EXIT_OK)  # noqa: PT009
        self.assertEqual(first=load_json(text=out), second=load_json(text=cactus_doc))  # noqa: PT009

    def test_export_dot(self: TestCli) -> None:
        """A cactus document is accepted as a factorization."""
        cactus_doc: str = dump_json(data=PartitionedCactusModel.from_domain(cactus_five()).model_dump(mode="json"))
        code, out = self._run("export-dot", "--input", self._write("cactus.json", cactus_doc))
        self.assertEqual(first=code, second=EXIT_OK)  # noqa: PT009
        self.assertTrue(expr=out.startswith("graph cactus {"))  # noqa: PT009

    def test_input_errors(self: TestCli) -> None:
        """Malformed JSON, missing files and invalid cacti exit with 2."""
        bad: str = self._write("bad.json", "{")
        self.assertEqual(first=self._run("theta", "forward", "--input", bad)[0], second=EXIT_USAGE)  # noqa: PT009
        missing: str = (Path(self.tmp.name) / "absent.json").as_posix()
        self.assertEqual(first=self._run("theta", "inverse", "--input", missing)[0], second=EXIT_USAGE)  # noqa: PT009
        broken = PartitionedCactusModel.from_domain(cactus_five()).model_dump(mode="json")
        broken["pi1"] = [[1, 2, 3], [4, 5]]
        broken["root_block_hint"] = None
        code, _ = self._run("theta", "forward", "--input", self._write("broken.json", dump_json(data=broken)))
        self.assertEqual(first=code, second=EXIT_USAGE)  # noqa: PT009
        with redirect_stdout(io.StringIO()), self.assertRaises(SystemExit):  # noqa: PT027
            main(["count", "--p", "1,1", "--n", "2"])

    def test_limit(self: TestCli) -> None:
        """``--limit`` lowers the brute-force bound; ``--force`` lifts it."""
        self.assertEqual(first=self._run("--limit", "2", "count-m", "--n", "3")[0], second=EXIT_LIMIT)  # noqa: PT009
        self.assertEqual(first=self._run("--limit", "2", "count-m", "--n", "3", "--force")[0], second=EXIT_OK)  # noqa: PT009

    def test_limit_is_scoped_to_the_command(self: TestCli) -> None:
        """``--limit`` leaves the environment as it found it."""
        key = "CACTUS3_MAX_N"
        os.environ.pop(key, None)
        self._run("--limit", "2", "count-m", "--n", "2")
        self.assertNotIn(member=key, container=os.environ)  # noqa: PT009
        os.environ[key] = "6"
        self.assertEqual(first=self._run("--limit", "2", "count-m", "--n", "3")[0], second=EXIT_LIMIT)  # noqa: PT009
        self.assertEqual(first=os.environ[key], second="6")  # noqa: PT009
        self.assertEqual(first=self._run("count-m", "--n", "3")[0], second=EXIT_OK)  # noqa: PT009

    def test_verify(self: TestCli) -> None:
        """One passing report per block triple."""
        code, out = self._run("verify", "jackson", "--max-n", "3")
        self.assertEqual(first=code, second=EXIT_OK)  # noqa: PT009
        reports = [load_json(text=line) for line in out.splitlines()]
        self.assertEqual(first=len(reports), second=1 + 8 + 27)  # noqa: PT009
        self.assertTrue(expr=all(report["pass"] for report in reports))  # noqa: PT009


if __name__ == "__main__":
    unittest.main()

import os
import tempfile
import unittest

import yaml

from xxz_maba.constants import SUITE_NAMES
from xxz_maba.tools.new import TemplateGenerator
from xxz_maba.utils.helper import config_from_dict, read_config


class TestTemplateGenerator(unittest.TestCase):
    def test_template_is_valid(self):
        text = TemplateGenerator.generate_run_template()
        config = config_from_dict(yaml.safe_load(text))
        self.assertEqual(config.suites, SUITE_NAMES)
        self.assertEqual(config.output, "report.jsonl")

    def test_writes_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "run_config.yaml")
            text = TemplateGenerator.generate_run_template(path)
            with open(path) as f:
                self.assertEqual(f.read(), text)
            data = read_config(path)
        self.assertEqual(data["instance"]["n"], 2)

    def test_explicit_hint(self):
        lines = TemplateGenerator.generate_run_template().splitlines()
        start = lines.index("# instance:")
        hint = "\n".join(line[2:] for line in lines[start:] if line.startswith("# "))
        config = config_from_dict(yaml.safe_load(hint))
        self.assertEqual(config.n, 2)
        self.assertEqual(config.explicit["q"], 1.2 + 0.4j)

from django.template import Context, Template
from django.test import SimpleTestCase


class TestSvgNumber(SimpleTestCase):

    def test_svgnum_good(self):
        template = Template("{% load djpolar_tags %}{{ 3.14159|svgnum }}")
        self.assertEqual(template.render(Context({})), "3.14")

    def test_svgnum_digits(self):
        template = Template("{% load djpolar_tags %}{{ value|svgnum:4 }}")
        self.assertEqual(template.render(Context({"value": 0.5})), "0.5000")

    def test_svgnum_negative_zero(self):
        template = Template("{% load djpolar_tags %}{{ value|svgnum }}")
        self.assertEqual(template.render(Context({"value": -0.001})), "0.00")

    def test_svgnum_bad(self):
        template = Template('{% load djpolar_tags %}{{ "bad"|svgnum }}')
        self.assertEqual(template.render(Context({})), "")


class TestTagColor(SimpleTestCase):

    def test_nonsingular(self):
        template = Template('{% load djpolar_tags %}{{ "nonsingular"|tag_color }}')
        self.assertEqual(template.render(Context({})), "#1a7f37")

    def test_singular(self):
        template = Template('{% load djpolar_tags %}{{ "singular"|tag_color }}')
        self.assertEqual(template.render(Context({})), "#8250df")

    def test_unknown(self):
        template = Template('{% load djpolar_tags %}{{ "Covered"|tag_color }}')
        self.assertEqual(template.render(Context({})), "#0969da")

"""
Named netflow families and their registry.
"""

from fractions import Fraction

import pytest

from kostant_bounds.domain.families import FamilyFactory, NamedFamily, NetflowFamilyInterface, family
from kostant_bounds.lib.errors import BadParamsError, UnsupportedFamilyError

ALL_FAMILIES = ['constant_an', 'cry', 'dilated_tesler', 'linear', 'power', 'staircase', 'tesler', 'two_rho']


class TestRegistry:
    def test_discovered(self):
        assert FamilyFactory.names() == ALL_FAMILIES

    def test_lookup_is_case_insensitive(self):
        assert FamilyFactory.get('Tesler') is FamilyFactory.get('tesler')

    def test_unknown(self):
        with pytest.raises(UnsupportedFamilyError):
            family(NamedFamily('hexagon'), 3)

    def test_name_required(self):
        with pytest.raises(TypeError, match='name'):

            class Nameless(NetflowFamilyInterface):
                def entries(self, params, n):
                    return [0] * n

    def test_register(self):
        class Ones(NetflowFamilyInterface):
            name = 'ones_for_test'

            def entries(self, params, n):  # noqa: ARG002
                return [1] * n

        FamilyFactory.register('ones_for_test', Ones())
        try:
            assert family(NamedFamily('ones_for_test'), 2).entries == (1, 1, -2)
        finally:
            FamilyFactory._families.pop('ones_for_test')


class TestMembers:
    @pytest.mark.parametrize(
        ('params', 'n', 'entries'),
        [
            (NamedFamily('tesler'), 3, (1, 1, 1, -3)),
            (NamedFamily('dilated_tesler', t=2), 2, (2, 2, -4)),
            (NamedFamily('cry', t=3), 3, (3, 0, 0, -3)),
            (NamedFamily('staircase', t=0), 3, (0, 1, 2, -3)),
            (NamedFamily('staircase', t=2), 2, (2, 3, -5)),
            (NamedFamily('two_rho', t=1), 3, (3, 1, -1, -3)),
            (NamedFamily('two_rho', t=2), 2, (4, 0, -4)),
            (NamedFamily('linear', a=Fraction(1)), 3, (3, 4, 5, -12)),
            (NamedFamily('constant_an', a=Fraction(1, 2)), 3, (2, 2, 2, -6)),
            (NamedFamily('power', a=Fraction(1), p=Fraction(2)), 3, (0, 1, 4, -5)),
            (NamedFamily('power', a=Fraction(2), p=Fraction(0)), 2, (2, 2, -4)),
        ],
    )
    def test_entries(self, params, n, entries):
        assert family(params, n).entries == entries

    @pytest.mark.parametrize(
        'params',
        [
            NamedFamily('cry', t=0),
            NamedFamily('dilated_tesler', t=0),
            NamedFamily('two_rho', t=0),
            NamedFamily('staircase', t=-1),
            NamedFamily('linear', a=Fraction(0)),
            NamedFamily('power', p=Fraction(-1)),
        ],
    )
    def test_bad_params(self, params):
        with pytest.raises(BadParamsError):
            family(params, 3)

    def test_bad_size(self):
        with pytest.raises(BadParamsError):
            family(NamedFamily('tesler'), 0)

    def test_describe(self):
        assert NamedFamily('cry', t=2).describe() == 't=2;a=1;p=1'

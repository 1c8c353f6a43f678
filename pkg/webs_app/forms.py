# webs_app/forms.py
from django import forms

from .exceptions import WebsError
from .scalars import FieldSpec
from .webcat import diagram_from_json, morphism_from_json

EXAMPLE = '{"source": [], "slices": [{"kind": "cup", "k": 1}, {"kind": "cap", "k": 1}]}'


class EvaluateForm(forms.Form):
    diagram = forms.CharField(widget=forms.Textarea(attrs={'rows': 6}),
                              help_text=f"Diagram or morphism JSON, e.g. {EXAMPLE}")
    N = forms.IntegerField(min_value=1, max_value=12, initial=3)
    field = forms.CharField(required=False, initial='q', help_text="q, q(i), a prime p, or p(i)")

    def clean_diagram(self):
        try:
            return morphism_from_json(self.cleaned_data['diagram'])
        except WebsError as exc:
            raise forms.ValidationError(str(exc))

    def clean_field(self):
        try:
            return FieldSpec.parse(self.cleaned_data.get('field') or 'q')
        except WebsError as exc:
            raise forms.ValidationError(str(exc))


class RenderForm(forms.Form):
    diagram = forms.CharField(widget=forms.Textarea(attrs={'rows': 6}), help_text="Diagram JSON")

    def clean_diagram(self):
        try:
            return diagram_from_json(self.cleaned_data['diagram'])
        except WebsError as exc:
            raise forms.ValidationError(str(exc))

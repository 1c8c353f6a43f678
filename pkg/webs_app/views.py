# webs_app/views.py
import logging
import time

from django.http import HttpResponse, JsonResponse
from django.views import View

from .evalfun import evaluate
from .exceptions import WebsError
from .forms import EXAMPLE, EvaluateForm, RenderForm
from .models import CheckRun
from .render import render_svg

logger = logging.getLogger(__name__)


class EvaluateView(View):
    """POST a diagram, get its matrix under the evaluation functor."""

    def get(self, request):
        return JsonResponse({
            'ok': True,
            'usage': 'POST diagram=<json>&N=<int>&field=<q|q(i)|p|p(i)>',
            'example': EXAMPLE,
        })

    def post(self, request):
        form = EvaluateForm(request.POST)
        if not form.is_valid():
            return JsonResponse({'ok': False, 'errors': form.errors.get_json_data()}, status=400)
        morphism, N, spec = form.cleaned_data['diagram'], form.cleaned_data['N'], form.cleaned_data['field']
        start = time.perf_counter()
        try:
            matrix = evaluate(morphism, N, spec)
        except WebsError as exc:
            return JsonResponse({'ok': False, 'errors': {'diagram': [str(exc)]}}, status=400)
        result = {'ok': True, 'source': list(morphism.source), 'target': list(morphism.target),
                  'matrix': matrix.to_json()}
        if not morphism.source and not morphism.target:
            result['scalar'] = matrix.field.format(matrix.entry(0, 0))
        elapsed = time.perf_counter() - start
        run = CheckRun.record('eval', {'diagram': request.POST['diagram'], 'N': N, 'field': spec.label},
                              [dict(result)], elapsed=elapsed)
        logger.info('evaluated %s -> %s at N=%s over %s (run %s)', morphism.source, morphism.target, N, spec, run.id)
        result['run_id'] = run.id
        return JsonResponse(result)


class RenderView(View):

    def post(self, request):
        form = RenderForm(request.POST)
        if not form.is_valid():
            return JsonResponse({'ok': False, 'errors': form.errors.get_json_data()}, status=400)
        try:
            svg = render_svg(form.cleaned_data['diagram'])
        except WebsError as exc:
            return JsonResponse({'ok': False, 'errors': {'diagram': [str(exc)]}}, status=400)
        return HttpResponse(svg, content_type='image/svg+xml')

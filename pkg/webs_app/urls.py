# webs_app/urls.py
from django.urls import path
from .views import EvaluateView, RenderView

app_name = 'webs_app'

urlpatterns = [
    path('evaluate/', EvaluateView.as_view(), name='evaluate'),
    path('render/', RenderView.as_view(), name='render'),
]

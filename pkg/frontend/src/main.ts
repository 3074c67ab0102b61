import { Direction, DrillApi } from './api.js';
import { DrillApp } from './app.js';

declare global {
  interface Window {
    BIREALIZE_SERVICE?: string;
    drillApp?: DrillApp;
  }
}

function serviceUrl(params: URLSearchParams): string {
  return params.get('service') ?? window.BIREALIZE_SERVICE ?? 'http://127.0.0.1:8000';
}

export function bootstrap(root: HTMLElement, search: string = window.location.search): DrillApp {
  const params = new URLSearchParams(search);
  const seedParam = params.get('seed');
  const direction = (params.get('direction') as Direction) ?? 'en-fr';
  const level = Number(params.get('level') ?? '0');
  const api = new DrillApi(serviceUrl(params));
  return new DrillApp(root, api, {
    direction,
    level,
    seed: seedParam === null ? undefined : Number(seedParam),
  });
}

const mount = document.getElementById('app');
if (mount) {
  window.drillApp = bootstrap(mount);
}

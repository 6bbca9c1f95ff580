// Browser entry point: same-origin API, mounted into #app.

import { ApiClient } from './api';
import { createApp } from './app';

const client = new ApiClient('');
const app = createApp(client);
document.getElementById('app')?.appendChild(app.element);
void app.sync();
